"""Turing Schmerl Calculus.

Ordinal arithmetic below epsilon_0, strictly positive modal formulas with
transfinite modalities, a normal-form based decision procedure for sequents,
and frame semantics with countermodel extraction.
"""

from tsc.calculus import (
    Monomial,
    MonomialNormalForm,
    NotRepresentable,
    Sequent,
    TOP_MNF,
    Verdict,
    check_countermodel,
    derives,
    embed,
    entails,
    equiv,
    format_verdict,
    is_mnf,
    mnf_of_point,
    normalize,
    parse_sequent,
    point_of_mnf,
    print_sequent,
    projection,
)
from tsc.dot import frame_dot
from tsc.formula import (
    TOP,
    Conj,
    Diamond,
    Formula,
    Top,
    conjoin,
    diamond,
    n_mod,
    parse_formula,
    print_formula,
)
from tsc.oracle import (
    FragmentSpec,
    UnsupportedExponent,
    enumerate_points,
    oracle_entails,
    oracle_forces,
    oracle_r_alpha,
)
from tsc.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    ParseError,
    add,
    ceil_with_log_at_least,
    compare,
    ell,
    from_int,
    hyper_e,
    is_limit,
    is_successor,
    iter_cnf_below,
    mul,
    omega_power,
    parse_ordinal,
    print_ordinal,
    split_one_plus,
)
from tsc.semantics import (
    ORIGIN,
    InvalidLSequence,
    Point,
    forces,
    in_cone,
    make_point,
    minimal_point,
    parse_point,
    print_point,
    r_minus_one,
    r_n,
    r_n_alpha,
)

__all__ = [
    # ordinals
    "Ordinal",
    "ParseError",
    "ZERO",
    "ONE",
    "OMEGA",
    "add",
    "ceil_with_log_at_least",
    "compare",
    "ell",
    "from_int",
    "hyper_e",
    "is_limit",
    "is_successor",
    "iter_cnf_below",
    "mul",
    "omega_power",
    "parse_ordinal",
    "print_ordinal",
    "split_one_plus",
    # formulas
    "Formula",
    "Top",
    "Conj",
    "Diamond",
    "TOP",
    "conjoin",
    "diamond",
    "n_mod",
    "parse_formula",
    "print_formula",
    # frame semantics
    "Point",
    "ORIGIN",
    "InvalidLSequence",
    "make_point",
    "parse_point",
    "print_point",
    "r_n",
    "r_minus_one",
    "r_n_alpha",
    "in_cone",
    "minimal_point",
    "forces",
    # calculus
    "Monomial",
    "MonomialNormalForm",
    "TOP_MNF",
    "NotRepresentable",
    "embed",
    "projection",
    "point_of_mnf",
    "mnf_of_point",
    "normalize",
    "is_mnf",
    "Sequent",
    "Verdict",
    "derives",
    "entails",
    "equiv",
    "parse_sequent",
    "print_sequent",
    "format_verdict",
    "check_countermodel",
    # fragment oracle
    "FragmentSpec",
    "UnsupportedExponent",
    "enumerate_points",
    "oracle_r_alpha",
    "oracle_forces",
    "oracle_entails",
    # visualization
    "frame_dot",
]
