"""Approval-based committee elections: D'Hondt extensions, comparison
rules and axiom checks, all in exact rational arithmetic."""

from opendhondt.axioms import (
    AxiomVerdict,
    check_closed_list_equivalence,
    check_ejr,
    check_house_monotonicity,
    check_jr,
    check_lower_quota,
    check_population_monotonicity,
    verify_witness,
)
from opendhondt.baselines import (
    av, ccha, ccra, mav, mha, monroe_assignment, mra, pav, rav, sav,
)
from opendhondt.dhondt import DivisorSequence, divisor_apportionment, odh, oodh
from opendhondt.errors import ElectionError
from opendhondt.fileformat import emit_election, parse_election, read_election
from opendhondt.generate import ElectionGenerator
from opendhondt.model import (
    ClosedListElection,
    Election,
    as_closed_list,
    build_election,
    supporters,
)
from opendhondt.report import WinnerReport
from opendhondt.search import search_counterexample
from opendhondt.support import (
    MaxMinResult,
    SupportDistribution,
    hall_ratio_maxmin,
    improve_distribution,
    kernel_of,
    maxmin_support,
    support_vector,
    tight_kernel,
    validate_distribution,
)

__version__ = "0.1.0"
