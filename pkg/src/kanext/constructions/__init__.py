"""Constructions built on the Kan engine."""

from .adjunction import AdjunctionReport, adjunction_check, hom_adjunction
from .codensity import LawReport, Monad, codensity
from .limits import LimitComparison, limit_as_ran
from .nerve import NerveReport, nerve, nerve_realization, realization
from .order import OrderExtension, extremal_extensions, monotone_functor, order_extension
from .yoneda import DensityReport, YonedaReport, coyoneda_check, density_check, yoneda_check

__all__ = [
    "AdjunctionReport", "adjunction_check", "hom_adjunction",
    "LawReport", "Monad", "codensity",
    "LimitComparison", "limit_as_ran",
    "NerveReport", "nerve", "nerve_realization", "realization",
    "OrderExtension", "extremal_extensions", "monotone_functor", "order_extension",
    "DensityReport", "YonedaReport", "coyoneda_check", "density_check", "yoneda_check",
]
