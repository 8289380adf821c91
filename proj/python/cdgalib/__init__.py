"""Exact cohomology and Massey products for finitely generated CDGAs.

Thin wrapper around the compiled extension. Sources passed to these
functions are catalog names (see catalog_names()) or full algebra
descriptions in the text format documented in the README.
"""

try:
    from . import _core
except ImportError:  # in-tree test builds put the module on sys.path directly
    import _core  # type: ignore

engine_version = _core.engine_version
__version__ = _core.engine_version

catalog_names = _core.catalog_names
catalog_source = _core.catalog_source
validate = _core.validate
d = _core.d
betti = _core.betti
cohomology = _core.cohomology
exactness_witness = _core.exactness_witness
cup = _core.cup
massey = _core.massey
amassey = _core.amassey
scan = _core.scan
gysin = _core.gysin
tensor = _core.tensor
run = _core.run

PreconditionError = _core.PreconditionError
ValidationError = _core.ValidationError
InternalError = _core.InternalError

__all__ = [
    "engine_version",
    "catalog_names",
    "catalog_source",
    "validate",
    "d",
    "betti",
    "cohomology",
    "exactness_witness",
    "cup",
    "massey",
    "amassey",
    "scan",
    "gysin",
    "tensor",
    "run",
    "PreconditionError",
    "ValidationError",
    "InternalError",
]
