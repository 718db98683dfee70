"""Parsers for the family and graph mini-languages of the command line.

Grammar::

    family  := NAME [":" params]
    graph   := term ("+" term)*
    term    := "bar(" graph ")" | "cyc(" graph ")" | NAME ":" params | SHORT
    params  := KEY "=" INT ("," INT)* (";" KEY "=" INT ("," INT)*)*
    SHORT   := ("K" | "P" | "C" | "E") INT

Whitespace around tokens is ignored.
"""
import re
from typing import Callable, Dict, List, Tuple

from arrangecount.arrangement import ArrangementFamily, FamilyKind
from arrangecount.errors import ArrangeCountError
from arrangecount.graphcount import (
    Graph,
    add_pendants,
    attach_cycle,
    build_F,
    build_F_affine,
    build_G,
    build_G_ratio,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
)


class SpecParseError(ArrangeCountError):
    pass


_INT_LIST = re.compile(r"^-?\d+(,-?\d+)*$")
_SHORT = re.compile(r"^([KPCE])(\d+)$")

Params = Dict[str, Tuple[int, ...]]


def parse_int_list(text: str) -> Tuple[int, ...]:
    text = text.replace(" ", "")
    if not _INT_LIST.match(text):
        raise SpecParseError(f"expected a comma separated integer list, got {text!r}")
    return tuple(int(x) for x in text.split(","))


def parse_params(text: str) -> Params:
    params: Params = {}
    for item in filter(None, (part.strip() for part in text.split(";"))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise SpecParseError(f"expected key=value, got {item!r}")
        if key in params:
            raise SpecParseError(f"parameter {key!r} given twice")
        params[key] = parse_int_list(value)
    return params


def _take(params: Params, spec: str, required: Tuple[str, ...], optional=()) -> Params:
    unknown = set(params) - set(required) - set(optional)
    if unknown:
        raise SpecParseError(f"unknown parameters {sorted(unknown)} in {spec!r}")
    missing = [key for key in required if key not in params]
    if missing:
        raise SpecParseError(f"missing parameters {missing} in {spec!r}")
    return params


def _single(params: Params, key: str, spec: str) -> int:
    if len(params[key]) != 1:
        raise SpecParseError(f"{key} takes a single value in {spec!r}")
    return params[key][0]


_FAMILY_ALIASES = {
    "eq1p": FamilyKind.EQ1_MINUS_ZERO,
    "eq1o": FamilyKind.EQ1_ORDERED,
    "diff": FamilyKind.DIFFERENCE,
    "affine": FamilyKind.AFFINE_MULT,
    "extcatalan": FamilyKind.EXTENDED_CATALAN,
    "logcatalan": FamilyKind.LOG_CATALAN,
    "logshi": FamilyKind.LOG_SHI,
}


def parse_family(spec: str) -> ArrangementFamily:
    """Parse e.g. ``eq1:a=2,3``, ``diff:a=1,3``, ``affine:a=2;b=1`` or ``catalan``."""
    name, _, rest = spec.strip().partition(":")
    name = name.strip()
    kind = _FAMILY_ALIASES.get(name)
    if kind is None:
        try:
            kind = FamilyKind(name)
        except ValueError:
            raise SpecParseError(f"unknown family {name!r} in {spec!r}") from None
    params = parse_params(rest)
    if kind in (FamilyKind.BRAID, FamilyKind.CATALAN, FamilyKind.SHI):
        _take(params, spec, ())
        return ArrangementFamily(kind)
    if kind == FamilyKind.EXTENDED_CATALAN:
        _take(params, spec, ("amax",))
        return ArrangementFamily(kind, a_max=_single(params, "amax", spec))
    if kind in (FamilyKind.AFFINE_MULT, FamilyKind.RATIO):
        _take(params, spec, ("a", "b"))
        return ArrangementFamily(kind, params["a"], params["b"])
    _take(params, spec, ("a",))
    return ArrangementFamily(kind, params["a"])


def _sized(build: Callable[[int], Graph]) -> Callable[[Params, str], Graph]:
    def make(params: Params, spec: str) -> Graph:
        _take(params, spec, ("k",))
        return build(_single(params, "k", spec))

    return make


def _with_a(
    build: Callable[..., Graph], with_b: bool
) -> Callable[[Params, str], Graph]:
    def make(params: Params, spec: str) -> Graph:
        keys = ("a", "b", "k") if with_b else ("a", "k")
        _take(params, spec, keys)
        k = _single(params, "k", spec)
        if with_b:
            return build(params["a"], params["b"], k)
        return build(params["a"], k)

    return make


_GRAPHS: Dict[str, Callable[[Params, str], Graph]] = {
    "G": _with_a(build_G, with_b=False),
    "F": _with_a(build_F, with_b=False),
    "Gr": _with_a(build_G_ratio, with_b=True),
    "Fa": _with_a(build_F_affine, with_b=True),
    "C": _sized(cycle_graph),
    "K": _sized(complete_graph),
    "P": _sized(path_graph),
    "E": _sized(empty_graph),
}
_WRAPPERS = {"bar": add_pendants, "cyc": attach_cycle}


def _split_top_level(spec: str) -> List[str]:
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(spec):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecParseError(f"unbalanced parentheses in {spec!r}")
        elif ch == "+" and depth == 0:
            terms.append(spec[start:i])
            start = i + 1
    if depth != 0:
        raise SpecParseError(f"unbalanced parentheses in {spec!r}")
    terms.append(spec[start:])
    return [t.strip() for t in terms]


def _parse_term(term: str) -> Graph:
    if not term:
        raise SpecParseError("empty graph term")
    for name, wrap in _WRAPPERS.items():
        if term.startswith(name + "(") and term.endswith(")"):
            return wrap(parse_graph(term[len(name) + 1 : -1]))
    short = _SHORT.match(term)
    if short:
        return _GRAPHS[short.group(1)]({"k": (int(short.group(2)),)}, term)
    name, sep, rest = term.partition(":")
    builder = _GRAPHS.get(name.strip())
    if builder is None or not sep:
        raise SpecParseError(f"unknown graph term {term!r}")
    return builder(parse_params(rest), term)


def parse_graph(spec: str) -> Graph:
    """Parse e.g. ``G:a=2,3;k=22``, ``bar(F:a=1;k=5)`` or ``C5 + K3``."""
    parts = [_parse_term(term) for term in _split_top_level(spec.strip())]
    return disjoint_union(parts)
