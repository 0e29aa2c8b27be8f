"""Name to rule lookup used by the axiom lab and the command line."""

from opendhondt import baselines, dhondt

RULES = {
    "odh": dhondt.odh,
    "oodh": dhondt.oodh,
    "av": baselines.av,
    "sav": baselines.sav,
    "mav": baselines.mav,
    "rav": baselines.rav,
    "pav": baselines.pav,
    "ccha": baselines.ccha,
    "ccra": baselines.ccra,
    "mha": baselines.mha,
    "mra": baselines.mra,
}

SEQUENTIAL = frozenset({"odh", "rav"})


def get_rule(name: str):
    try:
        return RULES[name.lower()]
    except KeyError:
        raise KeyError(f"unknown rule {name!r}; choose from {', '.join(RULES)}") from None


def rule_name(rule) -> str:
    for name, fn in RULES.items():
        if fn is rule:
            return name
    return getattr(rule, "__name__", "rule")
