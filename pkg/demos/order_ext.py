"""Extending a monotone map from {0, 2} to 0 < 1 < 2.

Lan takes the largest value below, Ran the smallest value above.  From {1}
alone neither extension exists at every point.
"""

from _common import workspace

from kanext.constructions import extremal_extensions, order_extension

ws = workspace("order_ext.json")
R = ws.category("R")
Q, X = ws.category("Q"), ws.functor("X")
rep = order_extension(Q, R, X)
least, greatest = extremal_extensions(Q, R, X)
print("Lan:", rep.lan, " least monotone extension above:", least)
print("Ran:", rep.ran, " greatest monotone extension below:", greatest)

mid = order_extension(ws.category("Qmid"), R, ws.functor("Xmid"))
print("from {1}: undefined at", mid.undefined)
