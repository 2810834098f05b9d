"""Text formats: APX frameworks, JSON labellings, order files, DOT, results.

All emitters sort by argument name so output is byte-identical across runs;
parse and emit are mutually inverse on those canonical forms.
"""

import json
import re
from typing import Iterable

from .errors import InvalidOrderError, ParseError, UnknownArgumentError
from .framework import NAME_PATTERN, Attack, Framework
from .preferences import PreferenceFunction, PreferenceOrder, validate_order
from .semantics import IN, OUT, UNDEC, Labelling
from .solvers import Certificate, Decision

_ARG_FACT = re.compile(r"arg\(\s*([A-Za-z0-9_]+)\s*\)\s*\.")
_ATT_FACT = re.compile(r"att\(\s*([A-Za-z0-9_]+)\s*,\s*([A-Za-z0-9_]+)\s*\)\s*\.")


def parse_apx(text: str) -> Framework:
    """Read `arg(name).` and `att(src,dst).` facts; `%` starts a comment.

    Duplicate facts are harmless; an attack naming an undeclared argument is
    an error, as is any other non-blank content.
    """
    args: set[str] = set()
    atts: set[Attack] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0]
        pos = 0
        while pos < len(line):
            if line[pos].isspace():
                pos += 1
                continue
            match = _ARG_FACT.match(line, pos)
            if match:
                args.add(match.group(1))
                pos = match.end()
                continue
            match = _ATT_FACT.match(line, pos)
            if match:
                atts.add((match.group(1), match.group(2)))
                pos = match.end()
                continue
            raise ParseError(f"unrecognised content: {line[pos:pos + 40]!r}", line=lineno)
    for src, dst in sorted(atts):
        if src not in args or dst not in args:
            raise UnknownArgumentError(
                f"attack ({src},{dst}) references an undeclared argument"
            )
    return Framework(args, atts)


def emit_apx(framework: Framework) -> str:
    lines = [f"arg({a})." for a in sorted(framework.arguments)]
    lines += [f"att({s},{t})." for s, t in sorted(framework.attacks)]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_labelling(text: str) -> Labelling:
    """Read a JSON object with "in"/"out"/"undec" lists of argument names."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"labelling is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("labelling must be a JSON object")
    unknown = set(data) - {IN, OUT, UNDEC}
    if unknown:
        raise ParseError(f"unknown labelling keys: {sorted(unknown)}")
    sets = {}
    for key in (IN, OUT, UNDEC):
        value = data.get(key, [])
        if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
            raise ParseError(f"labelling key {key!r} must be a list of argument names")
        sets[key] = value
    try:
        return Labelling(sets[IN], sets[OUT], sets[UNDEC])
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def emit_labelling(labelling: Labelling) -> str:
    return json.dumps(
        {
            IN: sorted(labelling.in_args),
            OUT: sorted(labelling.out_args),
            UNDEC: sorted(labelling.undec_args),
        }
    )


def parse_order(text: str) -> PreferenceOrder:
    """Read one component per line: classes split by `<`, members by `=`.

    Classes run from least to most preferred, e.g. `a < b < c = d`.
    """
    classes: list[frozenset[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        for chunk in line.split("<"):
            names = [n.strip() for n in chunk.split("=")]
            for name in names:
                if not NAME_PATTERN.match(name):
                    raise ParseError(f"bad argument name {name!r}", line=lineno)
            classes.append(frozenset(names))
    try:
        return PreferenceOrder(classes)
    except InvalidOrderError as exc:
        raise ParseError(str(exc)) from None


def emit_order(order: PreferenceOrder, framework: Framework) -> str:
    """One line per connected component, least-preferred class first."""
    if not validate_order(framework, order):
        raise InvalidOrderError("order is not a CC-wise total order on the framework")
    lines = []
    for component in framework.connected_components():
        chain = [cls for cls in order.classes if cls <= component]
        lines.append(" < ".join(" = ".join(sorted(cls)) for cls in chain))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_pref_fn(text: str) -> PreferenceFunction:
    """Read a JSON object mapping "src>dst" attack keys to 0 or 1."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"preference function is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("preference function must be a JSON object")
    bits: dict[Attack, int] = {}
    for key, value in data.items():
        src, sep, dst = key.partition(">")
        if not sep or not NAME_PATTERN.match(src) or not NAME_PATTERN.match(dst):
            raise ParseError(f"bad attack key {key!r}")
        if value not in (0, 1):
            raise ParseError(f"bit for {key!r} must be 0 or 1")
        bits[(src, dst)] = value
    return PreferenceFunction(bits)


def emit_pref_fn(fn: PreferenceFunction) -> str:
    return json.dumps({f"{s}>{t}": fn.bits[(s, t)] for s, t in sorted(fn.bits)})


_DOT_COLOURS = {IN: "green", OUT: "red", UNDEC: "gray"}


def emit_dot(
    framework: Framework,
    labelling: Labelling | None = None,
    highlight: Iterable[Attack] = (),
) -> str:
    """DOT digraph, nodes coloured green/red/gray when a labelling is given."""
    lines = ["digraph framework {"]
    for name in sorted(framework.arguments):
        if labelling is None:
            lines.append(f"  {name};")
        else:
            colour = _DOT_COLOURS[labelling.label(name)]
            lines.append(f"  {name} [style=filled fillcolor={colour}];")
    marked = {tuple(e) for e in highlight}
    for src, dst in sorted(framework.attacks):
        if (src, dst) in marked:
            lines.append(f"  {src} -> {dst} [color=red];")
        else:
            lines.append(f"  {src} -> {dst};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_result(decision: Decision, fmt: str = "json", elapsed_ms: float | None = None) -> str:
    """Serialise a decision; the JSON form is what `parse_result` reads back."""
    if fmt == "json":
        payload: dict = {
            "verdict": decision.verdict,
            "reduction": decision.reduction,
            "witness": (
                [sorted(cls) for cls in decision.witness.classes]
                if decision.witness is not None
                else None
            ),
            "certificate": (
                {
                    "condition": decision.certificate.condition,
                    "witness": list(decision.certificate.witness),
                    "detail": decision.certificate.detail,
                }
                if decision.certificate is not None
                else None
            ),
        }
        if elapsed_ms is not None:
            payload["elapsed_ms"] = round(elapsed_ms, 3)
        return json.dumps(payload)
    if fmt != "text":
        raise ValueError(f"unknown result format {fmt!r}")
    if decision.yes:
        if decision.witness is None or not decision.witness.classes:
            shown = "(empty order)"
        else:
            shown = " < ".join(" = ".join(sorted(cls)) for cls in decision.witness.classes)
        return f"YES (reduction {decision.reduction}) witness: {shown}"
    cert = decision.certificate
    where = ",".join(cert.witness)
    return (
        f"NO (reduction {decision.reduction}) condition {cert.condition}"
        f" fails at {where}: {cert.detail}"
    )


def parse_result(text: str) -> Decision:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"result is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "verdict" not in data or "reduction" not in data:
        raise ParseError("result must be a JSON object with verdict and reduction")
    witness = data.get("witness")
    order = PreferenceOrder(witness) if witness is not None else None
    cert_data = data.get("certificate")
    certificate = (
        Certificate(
            cert_data["condition"],
            tuple(cert_data["witness"]),
            cert_data.get("detail", ""),
        )
        if cert_data is not None
        else None
    )
    return Decision(data["verdict"] == "yes", data["reduction"], order, certificate)
