"""Quandle counting, two-component and difference invariants of virtual
knots given by Gauss codes."""

from .census import CensusConfig, CensusResult, run_census
from .gauss import (EnumerationConfig, GaussCode, GaussCodeError, GaussSymbol,
                    enumerate_codes, flip, is_evenly_intersticed, is_r1_reducible,
                    is_r2_reducible, parse_code, parse_text, parse_vector, to_text,
                    to_vector)
from .homcount import InvariantReport, count_homs, invariant_report, is_trivial_count, q2, qdiff
from .presentation import (PresentationMatrix, RelationList, gfix, lower_relations,
                           relations_to_matrix, upper_relations)
from .quandle import (BUILTIN_NAMES, QuandleTable, builtin, check_axioms, is_connected,
                      parse_quandle, serialize_table)

__version__ = "0.1.0"
