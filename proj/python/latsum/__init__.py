from ._latsum import (
    DomainError,
    PoleError,
    PreconditionError,
    ellip_k,
    isotropy_e2,
    lattice_function,
    singular_modulus,
    sum,
    symbolic_form,
    symmetry_vanishes,
    table,
    table_names,
    table_text,
)

__all__ = [
    "DomainError",
    "PoleError",
    "PreconditionError",
    "ellip_k",
    "isotropy_e2",
    "lattice_function",
    "singular_modulus",
    "sum",
    "symbolic_form",
    "symmetry_vanishes",
    "table",
    "table_names",
    "table_text",
]
