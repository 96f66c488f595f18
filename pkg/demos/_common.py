from pathlib import Path

from kanext.workspace import load

HERE = Path(__file__).resolve().parent


def workspace(name):
    return load([HERE / "workspaces" / name])


def show_functor(X):
    for b in X.shape.objects:
        print(f"  {b}: {len(X.sets[b])} element(s)")
