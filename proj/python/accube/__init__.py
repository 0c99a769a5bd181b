"""Cubical cohomology of finite abelian groups and AC-2-groups."""

import importlib

try:
    _impl = importlib.import_module("._accube", __name__)
except ImportError:  # in-tree builds keep the extension next to the package
    _impl = importlib.import_module("_accube")

__all__ = [
    "basis_size",
    "build_special",
    "canonical_group",
    "classify_count",
    "cocycle_representatives",
    "coboundary_witness",
    "cohomology_group",
    "cohomology_group_enum",
    "convert_instance",
    "equivalent",
    "hom_group",
    "is_cocycle",
    "middle_antisymmetry",
    "q_homology",
    "sinh_pair",
    "smith_normal_form",
    "verify_instance",
]

for _name in __all__:
    globals()[_name] = getattr(_impl, _name)
del _name, _impl, importlib
