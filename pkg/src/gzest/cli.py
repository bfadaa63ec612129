"""Category documents and the ``gzest`` command line.

Document layout (``#`` starts a comment; blank lines are ignored)::

    gzest-category 1
    name <free text>
    unit <label>

    [group]
    name Z3                      # or an explicit table:
    elements e a b
    row e : e a b
    factors 3                    # optional cyclic decomposition

    [labels]                     # label grade [qdim [pivotal]]
    [action]                     # g : images of the labels, in label order
    [fusion]                     # a b c [multiplicity]
    [F] [R] [U] [eta] [twists]   # indices followed by a cyc(...) scalar
    [meta]                       # key value
    [datum]                      # repeatable: tag, lambda, nu, t entries

All scalars use the ``cyc(M; k:c, ...)`` syntax.
"""

from __future__ import annotations

import json
import re
import sys
from dataclasses import dataclass

import click
import numpy as np

from . import __version__
from .catdata import (
    BUILTINS,
    InvalidParams,
    InvariantViolation,
    SkeletalGxBFC,
    UnsupportedMultiplicity,
    builtin,
    check_all,
)
from .groupcoh import (
    Cochain,
    FinGroup,
    GroupError,
    NonCyclicActor,
    NotFixedPoint,
    cyclic_lambda,
    group_from_name,
    roots_module,
)
from .modular import NotSpherical, s_blocks, zested_s_tilde, zested_theta_tilde
from .scalars import CycScalar, ScalarParseError, get_max_conductor, make_root, set_max_conductor
from .zesting import (
    DatumInvalid,
    NonCyclicGrading,
    NotTannakian,
    ZestingDatum,
    braided_promotions,
    enumerate_cyclic,
    invertible_module,
    pw_obstruction,
    verify_datum,
    zest,
)

__all__ = ["ParseError", "Document", "parse", "emit", "main", "cli"]

FORMAT_VERSION = "1"
SECTIONS = ("group", "labels", "action", "fusion", "F", "R", "U", "eta", "twists", "meta", "datum")
_TOKEN = re.compile(r"cyc\([^)]*\)|\S+")

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line, self.col, self.reason = line, col, message


@dataclass
class Document:
    category: SkeletalGxBFC
    data: list[ZestingDatum]


# parsing ---------------------------------------------------------------------


@dataclass
class _Tok:
    text: str
    line: int
    col: int


def _tokens(line: str, lineno: int) -> list[_Tok]:
    body = line.split("#", 1)[0]
    return [_Tok(m.group(), lineno, m.start() + 1) for m in _TOKEN.finditer(body)]


class _Reader:
    def __init__(self, text: str):
        self.header: list[list[_Tok]] = []
        self.sections: list[tuple[str, _Tok, list[list[_Tok]]]] = []
        current = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            toks = _tokens(raw, lineno)
            if not toks:
                continue
            first = toks[0]
            if first.text.startswith("["):
                if not first.text.endswith("]") or len(toks) != 1:
                    raise ParseError("malformed section header", lineno, first.col)
                name = first.text[1:-1]
                if name not in SECTIONS:
                    raise ParseError(f"unknown section [{name}]", lineno, first.col)
                current = []
                self.sections.append((name, first, current))
            elif current is None:
                self.header.append(toks)
            else:
                current.append(toks)

    def section(self, name: str) -> list[list[_Tok]] | None:
        found = [body for n, _, body in self.sections if n == name]
        if len(found) > 1 and name != "datum":
            tok = [t for n, t, _ in self.sections if n == name][1]
            raise ParseError(f"duplicate section [{name}]", tok.line, tok.col)
        return found[0] if found else None


def _int(tok: _Tok) -> int:
    try:
        return int(tok.text)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok.text!r}", tok.line, tok.col) from None


def _scalar(tok: _Tok) -> CycScalar:
    try:
        return CycScalar.from_text(tok.text)
    except ScalarParseError as exc:
        raise ParseError(str(exc), tok.line, tok.col) from None


def _lookup(table: dict, tok: _Tok, what: str) -> int:
    if tok.text not in table:
        raise ParseError(f"unknown {what} {tok.text!r}", tok.line, tok.col)
    return table[tok.text]


def _arity(row: list[_Tok], n: int, what: str, optional: int = 0):
    if not n <= len(row) <= n + optional:
        end = row[-1]
        raise ParseError(f"{what} needs {n} fields, got {len(row)}", end.line, end.col)


def _parse_group(body: list[list[_Tok]] | None, anchor: _Tok) -> FinGroup:
    if body is None:
        raise ParseError("missing [group] section", anchor.line, anchor.col)
    names, rows, factors, by_name = None, {}, None, None
    for row in body:
        key = row[0].text
        if key == "name":
            _arity(row, 2, "group name")
            try:
                by_name = group_from_name(row[1].text)
            except GroupError as exc:
                raise ParseError(str(exc), row[1].line, row[1].col) from None
        elif key == "elements":
            names = [t.text for t in row[1:]]
        elif key == "row":
            if len(row) < 3 or row[2].text != ":":
                raise ParseError("expected 'row <g> : <products>'", row[0].line, row[0].col)
            rows[row[1].text] = row[3:]
        elif key == "factors":
            factors = tuple(_int(t) for t in row[1:])
        else:
            raise ParseError(f"unknown group field {key!r}", row[0].line, row[0].col)
    if by_name is not None:
        if names is not None:
            raise ParseError("give either a group name or a table", body[0][0].line, 1)
        return by_name
    if names is None:
        raise ParseError("group needs 'name' or 'elements'", anchor.line, anchor.col)
    index = {n: i for i, n in enumerate(names)}
    table = []
    for n in names:
        if n not in rows:
            raise ParseError(f"missing table row for {n!r}", anchor.line, anchor.col)
        row = rows[n]
        if len(row) != len(names):
            raise ParseError("table row has the wrong length", row[0].line if row else anchor.line, 1)
        table.append([_lookup(index, t, "group element") for t in row])
    try:
        return FinGroup(table, names=names, factors=factors)
    except GroupError as exc:
        raise ParseError(str(exc), anchor.line, anchor.col) from None


def parse(text: str) -> Document:
    """Parse a category document; structural invariants are enforced on build."""
    rd = _Reader(text)
    start = _Tok("", 1, 1)
    if not rd.header or rd.header[0][0].text != "gzest-category":
        raise ParseError("document must start with 'gzest-category <version>'", 1, 1)
    version = rd.header[0]
    if len(version) != 2 or version[1].text != FORMAT_VERSION:
        raise ParseError(f"unsupported format version (expected {FORMAT_VERSION})", version[0].line, 1)
    name, unit_tok = "unnamed", None
    for row in rd.header[1:]:
        if row[0].text == "name":
            name = " ".join(t.text for t in row[1:])
        elif row[0].text == "unit":
            _arity(row, 2, "unit")
            unit_tok = row[1]
        else:
            raise ParseError(f"unknown header field {row[0].text!r}", row[0].line, row[0].col)
    group_anchor = next((t for n, t, _ in rd.sections if n == "group"), start)
    G = _parse_group(rd.section("group"), group_anchor)
    gidx = {n: i for i, n in enumerate(G.names)}

    lab_rows = rd.section("labels")
    if not lab_rows:
        raise ParseError("missing or empty [labels] section", start.line, 1)
    labels, grade, qdim, pivotal = [], [], [], []
    for row in lab_rows:
        _arity(row, 2, "label", optional=2)
        labels.append(row[0].text)
        grade.append(_lookup(gidx, row[1], "group element"))
        qdim.append(_scalar(row[2]) if len(row) > 2 else make_root(0, 1))
        pivotal.append(_scalar(row[3]) if len(row) > 3 else make_root(0, 1))
    lidx = {n: i for i, n in enumerate(labels)}
    if len(lidx) != len(labels):
        raise ParseError("duplicate label", lab_rows[0][0].line, 1)
    unit = _lookup(lidx, unit_tok, "label") if unit_tok else 0

    action = [list(range(len(labels))) for _ in G]
    for row in rd.section("action") or []:
        if len(row) < 2 or row[1].text != ":":
            raise ParseError("expected '<g> : <images>'", row[0].line, row[0].col)
        images = [_lookup(lidx, t, "label") for t in row[2:]]
        if len(images) != len(labels):
            raise ParseError("action row must list every label", row[0].line, row[0].col)
        action[_lookup(gidx, row[0], "group element")] = images

    fusion = {}
    for row in rd.section("fusion") or []:
        _arity(row, 3, "fusion entry", optional=1)
        key = tuple(_lookup(lidx, t, "label") for t in row[:3])
        fusion[key] = _int(row[3]) if len(row) == 4 else 1

    def table(section, kinds):
        out = {}
        for row in rd.section(section) or []:
            _arity(row, len(kinds) + 1, f"{section} entry")
            key = tuple(_lookup(gidx if k == "g" else lidx, t, "group element" if k == "g" else "label")
                        for k, t in zip(kinds, row))
            if key in out:
                raise ParseError(f"duplicate {section} entry", row[0].line, row[0].col)
            out[key] = _scalar(row[-1])
        return out

    F = table("F", "llllll")
    R = table("R", "lll")
    U = table("U", "glll")
    eta = table("eta", "lgg")
    tw = {k[0]: v for k, v in table("twists", "l").items()}
    meta = {}
    for row in rd.section("meta") or []:
        meta[row[0].text] = " ".join(t.text for t in row[1:])
    C = SkeletalGxBFC(name=name, group=G, labels=labels, grade=grade, fusion=fusion,
                      action=action, F=F, R=R, U=U, eta=eta, qdim=qdim, pivotal=pivotal,
                      twists=tw, unit=unit, meta=meta)
    data = [_parse_datum(C, body, gidx, lidx) for n, _, body in rd.sections if n == "datum"]
    return Document(C, data)


def _parse_datum(C, body, gidx, lidx) -> ZestingDatum:
    mod, inv_labels = invertible_module(C)
    where = {lab: i for i, lab in enumerate(inv_labels)}
    n = len(C.group)
    lam = np.full((n, n), mod.base.e, dtype=np.int64)
    nu_order, t_order, tag = 1, None, ()
    nu_entries, t_entries = [], []
    for row in body:
        key = row[0].text
        if key == "tag":
            tag = tuple(_int(t) for t in row[1:])
        elif key == "lambda":
            _arity(row, 4, "lambda entry")
            g, h = (_lookup(gidx, t, "group element") for t in row[1:3])
            lab = _lookup(lidx, row[3], "label")
            if lab not in where:
                raise ParseError("lambda must take invertible trivial-grade values", row[3].line, row[3].col)
            lam[g, h] = where[lab]
        elif key == "nu-order":
            nu_order = _int(row[1])
        elif key == "t-order":
            t_order = _int(row[1])
        elif key in ("nu", "t"):
            _arity(row, 5 if key == "nu" else 4, f"{key} entry")
            idx = tuple(_lookup(gidx, t, "group element") for t in row[1:-1])
            (nu_entries if key == "nu" else t_entries).append((idx, _int(row[-1])))
        else:
            raise ParseError(f"unknown datum field {key!r}", row[0].line, row[0].col)
    nu = np.zeros((n, n, n), dtype=np.int64)
    for idx, k in nu_entries:
        nu[idx] = k % nu_order
    t = None
    if t_order is not None:
        tv = np.zeros((n, n), dtype=np.int64)
        for idx, k in t_entries:
            tv[idx] = k % t_order
        t = Cochain(roots_module(C.group, t_order), tv)
    return ZestingDatum(Cochain(mod, lam), Cochain(roots_module(C.group, nu_order), nu), t, tag)


# emitting --------------------------------------------------------------------


def emit(C: SkeletalGxBFC, data: list[ZestingDatum] = ()) -> str:
    """Canonical text for a category and optional zesting data."""
    G, L = C.group, C.labels
    gn = G.names
    out = [f"gzest-category {FORMAT_VERSION}", f"name {C.name}", f"unit {L[C.unit]}", "", "[group]"]
    out.append("elements " + " ".join(gn))
    for g in G:
        out.append(f"row {gn[g]} : " + " ".join(gn[int(x)] for x in G.mul[g]))
    if G.factors:
        out.append("factors " + " ".join(str(n) for n in G.factors))
    out += ["", "[labels]"]
    for a in range(C.size):
        out.append(f"{L[a]} {gn[C.grade[a]]} {C.qdim[a].to_text()} {C.pivotal[a].to_text()}")
    out += ["", "[action]"]
    for g in G:
        out.append(f"{gn[g]} : " + " ".join(L[int(x)] for x in C.action[g]))
    out += ["", "[fusion]"]
    for (a, b, c), m in sorted(C.N.items()):
        out.append(f"{L[a]} {L[b]} {L[c]}" + (f" {m}" if m != 1 else ""))

    def section(title, table, kinds):
        out.extend(["", f"[{title}]"])
        for key in sorted(table):
            names = [gn[k] if kind == "g" else L[k] for kind, k in zip(kinds, key)]
            out.append(" ".join(names) + " " + table[key].to_text())

    section("F", C.F, "llllll")
    section("R", C.R, "lll")
    section("U", C.U, "glll")
    section("eta", C.eta, "lgg")
    section("twists", {(a,): v for a, v in C.twists.items()}, "l")
    if C.meta:
        out += ["", "[meta]"]
        for k in sorted(C.meta):
            out.append(f"{k} {C.meta[k]}")
    for D in data:
        out.extend(_emit_datum(C, D))
    return "\n".join(out) + "\n"


def _emit_datum(C: SkeletalGxBFC, D: ZestingDatum) -> list[str]:
    gn = C.group.names
    _, inv_labels = invertible_module(C)
    out = ["", "[datum]"]
    if D.tag:
        out.append("tag " + " ".join(str(x) for x in D.tag))
    for (g, h), v in D.lam.items():
        if v != D.lam.module.base.e:
            out.append(f"lambda {gn[g]} {gn[h]} {C.labels[inv_labels[v]]}")
    out.append(f"nu-order {D.nu.module.M}")
    for idx, v in D.nu.items():
        if v:
            out.append("nu " + " ".join(gn[g] for g in idx) + f" {v}")
    if D.t is not None:
        out.append(f"t-order {D.t.module.M}")
        for idx, v in D.t.items():
            if v:
                out.append("t " + " ".join(gn[g] for g in idx) + f" {v}")
    return out


# reports ---------------------------------------------------------------------


class Report:
    """Lines for standard output plus a machine-readable dictionary."""

    def __init__(self, command: str):
        self.lines: list[str] = []
        self.data: dict = {"command": command, "version": __version__}
        self.passed = True

    def say(self, line: str = ""):
        self.lines.append(line)

    def check(self, name: str, rep):
        self.say(str(rep))
        self.data.setdefault("checks", []).append({
            "name": name, "passed": rep.passed, "checked": rep.checked,
            "witnesses": [list(map(_jsonable, w)) for w in rep.failures[:20]]})
        self.passed &= rep.passed


def _jsonable(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, CycScalar):
        return x.to_text()
    return x


def _render(x: CycScalar, show_complex: bool) -> str:
    if not show_complex:
        return x.to_text()
    z = x.to_complex()
    return f"{x.to_text()} ~ {z.real:.9f}{z.imag:+.9f}i"


# command plumbing ------------------------------------------------------------


class _Fail(Exception):
    """Raised inside commands to exit with status 2 after printing."""


def _load(path: str) -> Document:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise click.UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _finish(ctx: click.Context, rep: Report):
    for line in rep.lines:
        click.echo(line)
    rep.data["passed"] = rep.passed
    path = ctx.obj.get("emit")
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(rep.data, fh, indent=2, sort_keys=True, default=_jsonable)
            fh.write("\n")
    if not rep.passed:
        raise _Fail()


def _select(C: SkeletalGxBFC, doc: Document, lam: int | None, nu: int | None,
            index: int | None) -> ZestingDatum:
    """A datum from --lambda/--nu (cyclic tags) or from the document."""
    if lam is not None or nu is not None:
        wanted = (lam or 0, nu or 0)
        for D in enumerate_cyclic(C):
            if tuple(D.tag) == wanted:
                return D
        if lam:
            mod, _ = invertible_module(C)
            if lam >= len(mod.base):
                raise click.UsageError(f"--lambda {lam} is not an invertible of the trivial component")
            D0 = next((D for D in enumerate_cyclic(C) if D.tag[0] == 0), None)
            raise click.UsageError(f"no cyclic datum with tag {wanted}; "
                                   "--lambda must name an H^2 representative"
                                   if D0 else f"no cyclic datum with tag {wanted}")
        raise click.UsageError(f"no cyclic datum with tag {wanted}")
    if doc.data:
        i = index or 0
        if not 0 <= i < len(doc.data):
            raise click.UsageError(f"document has {len(doc.data)} data; --datum {i} is out of range")
        return doc.data[i]
    raise click.UsageError("give --lambda/--nu or a document with a [datum] section")


def _datum_line(C: SkeletalGxBFC, D: ZestingDatum) -> str:
    gn = C.group.names
    _, inv_labels = invertible_module(C)
    lam = [f"{gn[g]},{gn[h]}->{C.labels[inv_labels[v]]}" for (g, h), v in D.lam.items()
           if v != D.lam.module.base.e]
    nu = [f"{','.join(gn[g] for g in idx)}:{v}" for idx, v in D.nu.items() if v]
    return (f"tag={tuple(D.tag)} lambda[{' '.join(lam) or '1'}] "
            f"nu(mu_{D.nu.module.M})[{' '.join(nu) or '1'}]")


# commands --------------------------------------------------------------------

datum_options = [
    click.option("--lambda", "lam", type=int, default=None, help="cyclic lambda class (tag a)"),
    click.option("--nu", type=int, default=None, help="cyclic nu index (tag b)"),
    click.option("--datum", "datum_index", type=int, default=None,
                 help="index of a [datum] section in the document"),
]


def _with_datum_options(fn):
    for opt in reversed(datum_options):
        fn = opt(fn)
    return fn


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="gzest")
@click.option("--emit", "emit_path", type=click.Path(dir_okay=False), default=None,
              help="write a machine-readable JSON report here")
@click.option("--max-conductor", type=int, default=None, help="cap on cyclotomic conductors")
@click.pass_context
def cli(ctx, emit_path, max_conductor):
    """Exact G-crossed braided fusion categories, zesting, and modular data."""
    ctx.ensure_object(dict)
    ctx.obj["emit"] = emit_path
    if max_conductor is not None:
        if max_conductor < 1:
            raise click.UsageError("--max-conductor must be positive")
        set_max_conductor(max_conductor)


@cli.command()
@click.argument("document")
@click.pass_context
def verify(ctx, document):
    """Run pentagon, action-coherence and heptagon checks (and any data)."""
    doc = _load(document)
    rep = Report("verify")
    rep.say(f"category {doc.category.name}: {doc.category.size} labels, |G| = {len(doc.category.group)}")
    for r in check_all(doc.category):
        rep.check(r.name, r)
    for i, D in enumerate(doc.data):
        r = verify_datum(doc.category, D)
        rep.check(f"datum-{i}", r)
    rep.say("PASS" if rep.passed else "FAIL")
    _finish(ctx, rep)


@cli.command("zest")
@click.argument("document")
@_with_datum_options
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="write the zested document here instead of standard output")
@click.pass_context
def zest_cmd(ctx, document, lam, nu, datum_index, out):
    """Apply a zesting datum and emit the zested category."""
    doc = _load(document)
    C = doc.category
    D = _select(C, doc, lam, nu, datum_index)
    Z = zest(C, D)
    text = emit(Z)
    rep = Report("zest")
    checks = check_all(Z)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep.say(f"zested by {_datum_line(C, D)}")
        for r in checks:
            rep.check(r.name, r)
    else:
        rep.say(text.rstrip("\n"))
        rep.passed = all(r.passed for r in checks)
    rep.data["document"] = text
    _finish(ctx, rep)


@cli.command("enumerate-cyclic")
@click.argument("document")
@click.option("--N", "n", type=int, default=None, help="expected order of the grading group")
@click.pass_context
def enumerate_cmd(ctx, document, n):
    """List all cyclic associative zesting data (lambda_a, nu * xi_b)."""
    doc = _load(document)
    C = doc.category
    data = enumerate_cyclic(C, n)
    rep = Report("enumerate-cyclic")
    rep.say(f"{len(data)} data")
    rows = []
    for D in data:
        ok = verify_datum(C, D).passed
        rep.passed &= ok
        rep.say(f"{_datum_line(C, D)} {'pass' if ok else 'FAIL'}")
        rows.append({"tag": list(D.tag), "passed": ok})
    rep.data["data"] = rows
    _finish(ctx, rep)


@cli.command()
@click.argument("document")
@click.option("--lambda", "lam", type=int, default=None, help="keep rows with this a")
@click.option("--nu", type=int, default=None, help="keep rows with this b")
@click.option("--t", "t_exp", type=int, default=None,
              help="keep rows with s = zeta^t, zeta = exp(-2 pi i / N^2)")
@click.pass_context
def promote(ctx, document, lam, nu, t_exp):
    """List braided promotions (a, b, s) with t(i,j) = s^(-ij)."""
    doc = _load(document)
    C = doc.category
    N = len(C.group)
    K = N * N
    zeta = make_root(-1, K)
    rep = Report("promote")
    rows = []
    for D in enumerate_cyclic(C, N):
        for P in braided_promotions(C, D):
            j = next(j for j in range(K) if zeta ** j == P.s)
            if (lam is not None and P.a != lam) or (nu is not None and P.b != nu):
                continue
            if t_exp is not None and j != t_exp % K:
                continue
            rows.append((P.a, P.b, j, P))
    rows.sort(key=lambda r: r[:3])
    rep.say(f"{len(rows)} promotions (zeta = exp(-2 pi i/{K}))")
    for a, b, j, P in rows:
        rep.say(f"({a}, {b}, zeta^{j})  s = {P.s.to_text()}  crossed tag {tuple(P.datum.tag)}")
    rep.data["promotions"] = [{"a": a, "b": b, "zeta_exponent": j, "s": P.s.to_text(),
                               "crossed_tag": list(P.datum.tag)} for a, b, j, P in rows]
    _finish(ctx, rep)


@cli.command()
@click.argument("document")
@click.option("--lambda", "lam", type=int, default=None, help="cyclic lambda_g with g this index")
@click.option("--datum", "datum_index", type=int, default=None)
@click.pass_context
def obstruction(ctx, document, lam, datum_index):
    """Print the obstruction 4-cocycle of lambda and a trivializer if one exists."""
    doc = _load(document)
    C = doc.category
    if lam is not None:
        mod, _ = invertible_module(C)
        if not 0 <= lam < len(mod.base):
            raise click.UsageError(f"--lambda {lam} is out of range")
        lam_c = cyclic_lambda(mod, lam)
        nu = None
    else:
        D = _select(C, doc, None, None, datum_index)
        lam_c, nu = D.lam, D.nu
    obs = pw_obstruction(C, lam_c, nu)
    rep = Report("obstruction")
    gn = C.group.names
    M = obs.cocycle.module.M
    vals = [(idx, v) for idx, v in obs.cocycle.items() if v]
    rep.say(f"obstruction values in mu_{M}: {len(vals)} nontrivial")
    for idx, v in vals:
        rep.say(f"  O({','.join(gn[g] for g in idx)}) = zeta_{M}^{v}")
    rep.say("4-cocycle: verified")
    if obs.trivializer is None:
        rep.say("trivializer: none")
    else:
        tm = obs.trivializer.module.M
        tv = [(idx, v) for idx, v in obs.trivializer.items() if v]
        rep.say(f"trivializer in mu_{tm}: {len(tv)} nontrivial values")
        for idx, v in tv:
            rep.say(f"  beta({','.join(gn[g] for g in idx)}) = zeta_{tm}^{v}")
    rep.data["obstruction"] = {"order": M, "values": [[list(i), v] for i, v in vals],
                               "trivializer": obs.trivializer is not None}
    _finish(ctx, rep)


@cli.command()
@click.argument("document")
@click.option("--convention", type=click.Choice(["hopf", "dual"]), default="hopf")
@click.option("--normalization", type=click.Choice(["e", "global"]), default="e")
@click.option("--complex", "show_complex", is_flag=True, help="also render entries numerically")
@click.pass_context
def modular(ctx, document, convention, normalization, show_complex):
    """Print G-crossed S-blocks and twists."""
    doc = _load(document)
    C = doc.category
    md = s_blocks(C, convention, normalization)
    gn, L = C.group.names, C.labels
    rep = Report("modular")
    rep.say(f"convention {convention}, normalization {normalization}; "
            "fixed-point isomorphisms are identities")
    blocks = {}
    for sec in sorted(md.sectors):
        blk = md.blocks[sec]
        g, h = sec
        rep.say(f"S({gn[g]},{gn[h]}) rows [{' '.join(L[x] for x in blk.rows)}] "
                f"cols [{' '.join(L[y] for y in blk.cols)}]")
        for x, row in zip(blk.rows, blk.matrix):
            rep.say(f"  {L[x]}: " + "  ".join(_render(v, show_complex) for v in row))
        blocks[f"{gn[g]},{gn[h]}"] = {"rows": [L[x] for x in blk.rows],
                                       "cols": [L[y] for y in blk.cols],
                                       "matrix": [[v.to_text() for v in r] for r in blk.matrix]}
    rep.say("twists")
    for x in sorted(md.twists):
        rep.say(f"  theta({L[x]}) = {_render(md.twists[x], show_complex)}")
    rep.data["blocks"] = blocks
    rep.data["twists"] = {L[x]: v.to_text() for x, v in md.twists.items()}
    _finish(ctx, rep)


@cli.command("compare-zested")
@click.argument("document")
@_with_datum_options
@click.option("--convention", type=click.Choice(["hopf", "dual"]), default="hopf")
@click.pass_context
def compare_zested(ctx, document, lam, nu, datum_index, convention):
    """Compare predicted zested S-blocks and twists with direct computation."""
    doc = _load(document)
    C = doc.category
    D = _select(C, doc, lam, nu, datum_index)
    Z = zest(C, D)
    s_cmp = zested_s_tilde(C, D, Z, convention=convention)
    t_cmp = zested_theta_tilde(C, D, Z)
    gn, L = C.group.names, C.labels
    rep = Report("compare-zested")
    rep.say(f"zested by {_datum_line(C, D)}")
    rep.say("non-invariant: these tables are not equivalence invariants; " + s_cmp.note)
    for row in s_cmp.rows:
        g, h = row.sector
        rep.say(f"S({gn[g]},{gn[h]}) factor {row.factor.to_text()}: {row.status}")
    for row in t_cmp.rows:
        rep.say(f"theta({L[row.label]}) factor {row.factor.to_text()}: {row.status}")
    rep.passed = s_cmp.agree and t_cmp.agree
    rep.data["non_invariant"] = True
    rep.data["S"] = {f"{gn[r.sector[0]]},{gn[r.sector[1]]}": r.status for r in s_cmp.rows}
    rep.data["theta"] = {L[r.label]: r.status for r in t_cmp.rows}
    _finish(ctx, rep)


@cli.command()
@click.argument("name", type=click.Choice(BUILTINS))
@click.option("--group", default=None, help="group name such as Z3, Z2xZ2 or S3")
@click.option("--b", "b", type=int, default=0, help="3-cocycle index for vec_g_omega")
@click.option("--k", "k", type=int, default=1, help="quadratic form exponent for vect_q")
@click.option("--tau-sign", type=click.Choice(["1", "-1"]), default="1")
@click.option("--alpha-sign", type=click.Choice(["1", "-1"]), default="1")
@click.pass_context
def example(ctx, name, group, b, k, tau_sign, alpha_sign):
    """Emit a builtin category document."""
    C = builtin(name, group=group, b=b, k=k, tau_sign=int(tau_sign), alpha_sign=int(alpha_sign))
    rep = Report("example")
    text = emit(C)
    rep.say(text.rstrip("\n"))
    rep.data["document"] = text
    _finish(ctx, rep)


_USAGE_ERRORS = (ParseError, InvariantViolation, InvalidParams, GroupError, DatumInvalid,
                 NonCyclicGrading, NonCyclicActor, NotFixedPoint, NotTannakian, NotSpherical,
                 UnsupportedMultiplicity, ScalarParseError)


def main(argv: list[str] | None = None) -> int:
    """Entry point; returns 0 on pass, 2 on a failed check, 1 on usage errors."""
    cap = get_max_conductor()
    try:
        cli.main(args=argv, prog_name="gzest", standalone_mode=False)
        return EXIT_OK
    except _Fail:
        return EXIT_FAIL
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except _USAGE_ERRORS as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        return EXIT_USAGE
    finally:
        set_max_conductor(cap)


if __name__ == "__main__":
    sys.exit(main())
