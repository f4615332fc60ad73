"""Exact counts of finite field elements with prescribed trace and co-trace.

The closed-form pipeline expresses the counts T_ij over F_{p^m} through
Kloosterman sums over F_p, lifted by Carlitz's identity and solved from a
left-circulant linear system with exact cyclotomic arithmetic.  The
enumeration oracle recomputes the same tables by walking the whole field,
so every identity in the chain is testable against ground truth.
"""

from .circulant import (
    LeftCirculant,
    RowSumReport,
    det_eigen,
    det_exact,
    invert_exact,
    row_sum_reciprocal_check,
    xy_det,
)
from .counting import (
    AsymptoticRow,
    SolutionVector,
    TraceCotraceTable,
    asymptotic_report,
    build_system,
    closed_form_char2,
    closed_form_char3,
    closed_form_char5,
    full_table,
    reorder_circulant,
    residual_bound,
    solve_t1s,
)
from .cyclotomic import CycloNum, zeta_pow
from .ext_field import (
    ExtFieldElem,
    FieldCtx,
    enumerate_elements,
    find_irreducible,
    is_irreducible,
)
from .kloosterman import (
    KloostermanProfile,
    LehmerReport,
    carlitz_lift,
    check_lehmer,
    check_weil,
    kloosterman_direct,
    kloosterman_prime,
)
from .oracle import TallyJob, tally, tally_partitioned
from .prime_field import PElem, inv_mod, primitive_root

__version__ = "0.1.0"

__all__ = [
    "AsymptoticRow",
    "CycloNum",
    "ExtFieldElem",
    "FieldCtx",
    "KloostermanProfile",
    "LeftCirculant",
    "LehmerReport",
    "PElem",
    "RowSumReport",
    "SolutionVector",
    "TallyJob",
    "TraceCotraceTable",
    "asymptotic_report",
    "build_system",
    "carlitz_lift",
    "check_lehmer",
    "check_weil",
    "closed_form_char2",
    "closed_form_char3",
    "closed_form_char5",
    "det_eigen",
    "det_exact",
    "enumerate_elements",
    "find_irreducible",
    "full_table",
    "inv_mod",
    "invert_exact",
    "is_irreducible",
    "kloosterman_direct",
    "kloosterman_prime",
    "primitive_root",
    "reorder_circulant",
    "residual_bound",
    "row_sum_reciprocal_check",
    "solve_t1s",
    "tally",
    "tally_partitioned",
    "xy_det",
    "zeta_pow",
]
