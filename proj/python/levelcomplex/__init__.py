"""Initial ideals of 2-minors: complexes, canonical modules, Betti tables, shellings."""

from ._core import GuardExceeded, InputError, betti, facets, fixture_names, level, run, shelling

__all__ = ["GuardExceeded", "InputError", "betti", "facets", "fixture_names", "level", "run", "shelling"]
