"""Cellular automata over finitely generated groups.

A cellular automaton is handled both as a global map on configurations and
as its local function ``x -> T(x)(1)``; :func:`star` composes local functions
and agrees with composition of global maps.
"""

from .automaton import (
    RuleTable,
    builtin_rule,
    compose_global,
    constant_rule,
    equals,
    identity_rule,
    rule_from_json,
    rule_to_json,
    star,
)
from .config import Alphabet, FiniteSupport, FullTable, Pattern, Periodic, all_configurations
from .group import GroupContext, parse_group
from .memory import depends_on, is_memory_subset, minimize, restrict_rule
from .subshift import Sft, closure_check, golden_mean, member, star_restricted
from .uniform import LocalOracle, equivariance_check, infer_from_oracle, rule_oracle

__all__ = [
    "Alphabet",
    "FiniteSupport",
    "FullTable",
    "GroupContext",
    "LocalOracle",
    "Pattern",
    "Periodic",
    "RuleTable",
    "Sft",
    "all_configurations",
    "builtin_rule",
    "closure_check",
    "compose_global",
    "constant_rule",
    "depends_on",
    "equals",
    "equivariance_check",
    "golden_mean",
    "identity_rule",
    "infer_from_oracle",
    "is_memory_subset",
    "member",
    "minimize",
    "parse_group",
    "restrict_rule",
    "rule_from_json",
    "rule_oracle",
    "rule_to_json",
    "star",
    "star_restricted",
]
