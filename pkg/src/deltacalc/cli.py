"""Batch command-line surface over the calculator modules."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import artin, e1, exprs, gamma
from . import words as wd
from .errors import DomainError, RangeError
from .f2 import GradedDims
from .gamma import AxiomReport

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_SYNTAX = 3
EXIT_DOMAIN = 4
EXIT_RANGE = 5

_EPILOG = """\
exit codes:
  0  success
  2  unknown subcommand or bad usage
  3  expression or JSON syntax error
  4  domain/precondition violation
  5  integer range overflow (indices must stay below 2^32)

environment:
  DELTA_CALC_THREADS   caps internal parallelism for batch verification
                       commands (0 or unset = auto)

JSON outputs follow the schemas shipped in docs/.
"""


def worker_count() -> int:
    raw = os.environ.get("DELTA_CALC_THREADS", "0")
    try:
        val = int(raw)
    except ValueError:
        val = 0
    if val <= 0:
        val = os.cpu_count() or 1
    return max(1, val)


def _load_json_arg(value: str, what: str):
    """Accept inline JSON or a path to a JSON file."""
    text = value
    if not value.lstrip().startswith(("{", "[")):
        try:
            with open(value, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as err:
            raise DomainError(f"cannot read {what} file {value!r}: {err}") from err
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise exprs.ParseError(f"invalid {what} JSON: {err.msg}", text, err.pos) from err


def _graded_dims(value: str) -> GradedDims:
    return GradedDims.from_json(_load_json_arg(value, "dimension table"))


def _ring(value: str) -> artin.ArtinRing:
    return artin.ArtinRing.from_json(_load_json_arg(value, "ring"))


def _axiom_report_json(report: AxiomReport) -> dict:
    return {"checked": report.checked, "failures": report.failures, "ok": report.ok}


# --- command handlers: each returns (payload, text) ---


def _cmd_reduce(args):
    element = wd.reduce(exprs.parse_delta(args.expr))
    text = exprs.format_delta(element)
    return {"element": text}, text


def _cmd_compose(args):
    element = wd.compose(exprs.parse_delta(args.left), exprs.parse_delta(args.right))
    text = exprs.format_delta(element)
    return {"element": text}, text


def _cmd_stats(args):
    word = exprs.parse_word(args.word)
    payload = {
        "word": exprs.format_word(word),
        "excess": wd.excess(word),
        "degree": wd.degree(word),
        "length": wd.length(word),
        "admissible": wd.is_admissible(word),
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    return payload, text


def _cmd_annihilate(args):
    s = wd.annihilation_order(args.j, args.t, args.max_s)
    if s is None:
        return (
            {"s": None, "searched_up_to": args.max_s},
            f"not annihilated within s <= {args.max_s}",
        )
    return {"s": s}, f"s = {s}"


def _cmd_theta(args):
    word = wd.theta(args.s, args.t)
    text = exprs.format_word(word)
    return {"word": text}, text


def _cmd_alpha2delta(args):
    raw = args.word.strip()
    try:
        indices = tuple(int(a) for a in raw.split(",")) if raw else ()
    except ValueError as err:
        raise DomainError(f"alpha indices must be comma-separated integers: {raw!r}") from err
    word = wd.alpha_to_delta(wd.AlphaWord(indices, args.degree))
    text = exprs.format_word(word)
    return {"word": text}, text


def _cmd_sgens(args):
    gens = gamma.s_generators(args.n, args.max_degree)
    items = [
        {"text": exprs.format_generator(g), "degree": g.degree, "weight": g.weight}
        for g in gens
    ]
    text = "\n".join(f"{it['text']}  (degree {it['degree']}, weight {it['weight']})"
                     for it in items)
    return {"generators": items}, text


def _cmd_sbasis(args):
    basis = gamma.s_basis(_graded_dims(args.hq).items(), args.max_degree)
    payload = {"by_degree": basis.by_degree.to_json()}
    lines = [f"{deg}: {dim}" for deg, dim in basis.by_degree.items()]
    if args.by_weight:
        payload["by_weight"] = {str(w): t.to_json() for w, t in basis.by_weight.items()}
        for w, t in basis.by_weight.items():
            lines.append(f"weight {w}: " + "  ".join(f"{d}:{k}" for d, k in t.items()))
    return payload, "\n".join(lines)


def _cmd_act(args):
    element = gamma.delta_act(args.i, exprs.parse_s_element(args.on))
    text = exprs.format_s_element(element)
    return {"element": text}, text


def _cmd_probe(args):
    result = gamma.nilpotency_probe(args.kind, exprs.parse_generator(args.gen), args.max_iter)
    steps = [exprs.format_s_element(e) for e in result.trajectory]
    payload = {
        "kind": result.kind,
        "start": exprs.format_generator(result.start),
        "status": result.status,
        "order": result.order,
        "iterations": result.iterations,
        "steps": steps,
    }
    if result.status == "nilpotent":
        head = f"nilpotent of order {result.order}"
    else:
        head = f"nonvanishing through {result.iterations} iterations"
    text = "\n".join([head] + [f"  step {k}: {s}" for k, s in enumerate(steps)])
    return payload, text


def _cmd_e1(args):
    table = e1.e1_page(_graded_dims(args.hq), args.max_t)
    return table.to_json(), table.render_text()


def _cmd_ring_mul(args):
    ring = _ring(args.ring)
    product = artin.ring_multiply(ring, ring.parse(args.left), ring.parse(args.right))
    text = ring.format(product)
    return {"element": text}, text


def _cmd_m_index(args):
    value = artin.m_index(_ring(args.ring))
    return {"m_index": value}, f"m_index = {value}"


def _cmd_nilpotency(args):
    ring = _ring(args.ring)
    element = artin.MixedElement.from_json(ring, _load_json_arg(args.element, "mixed element"))
    index = artin.gamma2_nilpotency_index(element)
    mi = artin.m_index(ring)
    bound = (mi - 1).bit_length()
    payload = {
        "element": element.format(),
        "index": index,
        "m_index": mi,
        "index_bound": bound,
        "within_bound": index <= bound,
    }
    lines = [f"index = {index}", f"m_index = {mi}", f"bound = {bound}"]
    if args.oracle:
        expansion = artin.gamma2_oracle_expand(element, args.s)
        projection = artin.indecomposable_part(expansion)
        zero = not any(projection.values())
        payload["oracle"] = {
            "s": args.s,
            "projection_zero": zero,
            "matches_closed_form": zero == (args.s >= index),
        }
        lines.append(
            f"oracle at s={args.s}: projection {'zero' if zero else 'nonzero'}, "
            f"{'consistent' if payload['oracle']['matches_closed_form'] else 'INCONSISTENT'}"
        )
    return payload, "\n".join(lines)


_AXIOM_RING = artin.ArtinRing(("t",), ((4,),))


def _cmd_axioms(args):
    trials = args.trials
    workers = min(worker_count(), max(1, trials // 50))

    def run(suite, chunk_args):
        if workers == 1 or len(chunk_args) == 1:
            reports = [suite(*a) for a in chunk_args]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                reports = list(pool.map(lambda a: suite(*a), chunk_args))
        merged = AxiomReport(0, {a: 0 for a in gamma.AXIOM_NAMES},
                             {a: 0 for a in gamma.AXIOM_NAMES})
        for r in reports:
            merged.trials += r.trials
            for a in gamma.AXIOM_NAMES:
                merged.checked[a] += r.checked[a]
                merged.failures[a] += r.failures[a]
        return merged

    def chunks(seed):
        per = max(1, trials // workers)
        out = []
        done = 0
        k = 0
        while done < trials:
            size = min(per, trials - done)
            out.append((size, seed + k))
            done += size
            k += 1
        return out

    f2_report = run(gamma.gamma_axiom_suite, chunks(args.seed))
    ring_report = run(
        lambda n, s: artin.gamma_axiom_suite_over_ring(_AXIOM_RING, n, s),
        chunks(args.seed + 10_000),
    )
    payload = {
        "trials": trials,
        "f2": _axiom_report_json(f2_report),
        "coefficient_ring": _AXIOM_RING.to_json(),
        "ring": _axiom_report_json(ring_report),
        "ok": f2_report.ok and ring_report.ok,
    }
    lines = [f"{trials} trials per coefficient setting"]
    for label, rep in (("GF(2)", f2_report), ("GF(2)[t]/(t^4)", ring_report)):
        for a in gamma.AXIOM_NAMES:
            lines.append(f"{label:>14}  {a}: {rep.checked[a] - rep.failures[a]}/{rep.checked[a]} pass")
    lines.append("all axioms pass" if payload["ok"] else "FAILURES PRESENT")
    return payload, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltacalc",
        description="Symbolic calculator for mod-2 higher divided squares: "
        "Adem rewriting, divided power bases, first-page tables, and "
        "Artin-ring nilpotency checks.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized verification commands")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def cmd(name, handler, help_, configure):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        configure(p)
        p.set_defaults(handler=handler)

    cmd("reduce", _cmd_reduce, "rewrite a sum of delta words to admissible form",
        lambda p: p.add_argument("expr"))
    cmd("compose", _cmd_compose, "concatenate two elements and reduce",
        lambda p: (p.add_argument("left"), p.add_argument("right")))
    cmd("stats", _cmd_stats, "excess/degree/length/admissibility of a word",
        lambda p: p.add_argument("word"))

    def conf_annihilate(p):
        p.add_argument("--j", type=int, required=True)
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--max-s", type=int, default=16, dest="max_s")
    cmd("annihilate", _cmd_annihilate,
        "least s with theta(s,t) * delta_j reducing to zero", conf_annihilate)

    def conf_theta(p):
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--t", type=int, required=True)
    cmd("theta", _cmd_theta, "the doubling composite theta(s,t)", conf_theta)

    def conf_a2d(p):
        p.add_argument("--word", required=True,
                       help="comma-separated alpha indices, applied rightmost first")
        p.add_argument("--degree", type=int, required=True)
    cmd("alpha2delta", _cmd_alpha2delta, "convert an alpha word on a given degree",
        conf_a2d)

    def conf_sgens(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--max-degree", type=int, required=True, dest="max_degree")
    cmd("sgens", _cmd_sgens, "free divided-power generators on x_n", conf_sgens)

    def conf_sbasis(p):
        p.add_argument("--hq", required=True, help="graded dims (inline JSON or a file)")
        p.add_argument("--max-degree", type=int, required=True, dest="max_degree")
        p.add_argument("--by-weight", action="store_true", dest="by_weight")
    cmd("sbasis", _cmd_sbasis, "basis dimensions of the free algebra", conf_sbasis)

    def conf_act(p):
        p.add_argument("--i", type=int, required=True)
        p.add_argument("--on", required=True)
    cmd("act", _cmd_act, "apply delta_i to an element", conf_act)

    def conf_probe(p):
        p.add_argument("--kind", required=True, help="gamma2 | alpha:K | andre")
        p.add_argument("--gen", required=True)
        p.add_argument("--max-iter", type=int, required=True, dest="max_iter")
    cmd("probe", _cmd_probe, "iterate an operation on the indecomposables", conf_probe)

    def conf_e1(p):
        p.add_argument("--hq", required=True, help="graded dims (inline JSON or a file)")
        p.add_argument("--max-t", type=int, required=True, dest="max_t")
    cmd("e1", _cmd_e1, "first-page dimension table", conf_e1)

    def conf_ring_mul(p):
        p.add_argument("--ring", required=True)
        p.add_argument("left")
        p.add_argument("right")
    cmd("ring-mul", _cmd_ring_mul, "normal-form product in a monomial quotient ring",
        conf_ring_mul)
    cmd("m-index", _cmd_m_index, "nilpotency exponent of the maximal ideal",
        lambda p: p.add_argument("--ring", required=True))

    def conf_nilpotency(p):
        p.add_argument("--ring", required=True)
        p.add_argument("--element", required=True, help="mixed element JSON")
        p.add_argument("--oracle", action="store_true")
        p.add_argument("--s", type=int, default=2)
    cmd("nilpotency", _cmd_nilpotency,
        "divided-square nilpotency index of a mixed element", conf_nilpotency)
    cmd("axioms", _cmd_axioms, "fuzz the divided power axioms",
        lambda p: p.add_argument("--trials", type=int, default=200))

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "handler", None) is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        payload, text = args.handler(args)
    except exprs.ParseError as err:
        print(f"deltacalc: {err}", file=sys.stderr)
        return EXIT_SYNTAX
    except RangeError as err:
        print(f"deltacalc: {err}", file=sys.stderr)
        return EXIT_RANGE
    except DomainError as err:
        print(f"deltacalc: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except (KeyError, TypeError) as err:
        print(f"deltacalc: malformed input: {err}", file=sys.stderr)
        return EXIT_SYNTAX
    except ValueError as err:
        print(f"deltacalc: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)
    return EXIT_OK
