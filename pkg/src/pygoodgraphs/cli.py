"""Command line front end: pygoodgraphs <subcommand> [graph] [options].

Graphs are read as graph6, as an edge list ('n m' then 'u v' lines) or as a
JSON object with a 'graph6' key, from the positional argument, --file, or stdin.
Exit status is 0 on success, 1 for bad findings with --fail-on-bad, 2 on errors.
"""
import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, TextIO, Tuple

from pygoodgraphs.pygoodgraphs_base_classes import ClawFoundError, ColouringError, DisconnectedGraphError
from pygoodgraphs.pygoodgraphs_base_classes import GraphFormatError, GraphSizeError, ObstructionSpecError
from pygoodgraphs.pygoodgraphs_base_classes import OrderError, OutputMode, PreconditionError
from pygoodgraphs.graph_core import Graph, parse_graph, to_graph6
from pygoodgraphs.colouring import VertexOrder, chromatic_number, greedy_colour, greedy_colour_start2
from pygoodgraphs.order_search import GoodnessOracle, find_bad_connected_order, gamma_c, is_good
from pygoodgraphs.obstruction_catalog import NAMED_GRAPHS, ObstructionSpec, contains_obstruction
from pygoodgraphs.obstruction_catalog import generate, generate_bracelet, generate_prism, is_good_clawfree
from pygoodgraphs.minbad_lab import Census, CensusReport, check_lemmas, search_all_orders_bad

# Anything else is a bug and keeps its traceback
DOMAIN_ERRORS = (GraphFormatError, GraphSizeError, OrderError, ColouringError, DisconnectedGraphError,
                 ObstructionSpecError, ClawFoundError, PreconditionError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Invocation:
    """One parsed command line with its streams"""
    def __init__(self, args: argparse.Namespace, stdin: TextIO, stdout: TextIO, stderr: TextIO):
        self.args = args
        self.stdin = stdin
        self.stdout = stdout
        self.stderr = stderr
        self.mode = OutputMode(args.output)
        self.oracle = GoodnessOracle(loud=args.loud)

    def graph(self) -> Graph:
        inline, path = self.args.graph, self.args.file
        if inline and path:
            raise UsageError("give the graph either inline or with --file, not both")
        if path:
            with open(path) as handle:
                return parse_graph(handle.read())
        if inline:
            return parse_graph(inline)
        return parse_graph(self.stdin.read())

    def order(self, g: Graph, require_connected: bool=False) -> VertexOrder:
        try:
            seq = [int(x) for x in self.args.order.split(",") if x.strip()]
        except ValueError:
            raise OrderError(f"'{self.args.order}' is not a comma separated list of vertices")
        return VertexOrder.of(g, seq, require_connected=require_connected)

    def emit(self, payload, text: str) -> None:
        if self.mode is OutputMode.JSON:
            print(json.dumps(payload), file=self.stdout)
        else:
            print(text, file=self.stdout)

    def status(self, bad: bool) -> int:
        return 1 if bad and self.args.fail_on_bad else 0


def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"'{text}' is not a comma separated list of integers")

def _colour_text(colours: Dict[str, int]) -> str:
    return " ".join(f"{v}:{c}" for v, c in colours.items())


def cmd_chi(inv: Invocation) -> int:
    chi = chromatic_number(inv.graph())
    inv.emit({"chi": chi}, str(chi))
    return 0

def cmd_greedy(inv: Invocation) -> int:
    g = inv.graph()
    order = inv.order(g)
    colouring = greedy_colour_start2(g, order) if inv.args.start2 else greedy_colour(g, order)
    payload = {"order": list(order.seq), "connected": order.connected,
               "colouring": colouring.as_json(), "num_colours": colouring.num_colours}
    inv.emit(payload, f"{colouring.num_colours} colours\n{_colour_text(colouring.as_json())}")
    return 0

def cmd_gamma_c(inv: Invocation) -> int:
    value = gamma_c(inv.graph())
    inv.emit({"gamma_c": value}, str(value))
    return 0

def cmd_find_bad_order(inv: Invocation) -> int:
    g = inv.graph()
    found = find_bad_connected_order(g)
    if found is None:
        inv.emit({"order": None, "chi": chromatic_number(g)}, "none")
        return 0
    order, colouring = found
    payload = {"order": list(order.seq), "colouring": colouring.as_json(),
               "num_colours": colouring.num_colours, "chi": chromatic_number(g)}
    inv.emit(payload, f"{','.join(map(str, order.seq))}\n{_colour_text(colouring.as_json())}")
    return inv.status(True)

def cmd_is_good(inv: Invocation) -> int:
    verdict = is_good(inv.graph(), inv.oracle, inv.args.threads)
    text = "good" if verdict.good else \
        f"bad: subset {sorted(verdict.witness_subset)} order {list(verdict.witness_order)} uses {verdict.witness_colours} > {verdict.chi}"
    inv.emit(verdict.as_json(), text)
    return inv.status(not verdict.good)

def cmd_is_minimally_bad(inv: Invocation) -> int:
    g = inv.graph()
    verdict = is_good(g, inv.oracle, inv.args.threads)
    minimal = g.n > 0 and not verdict.good and len(verdict.witness_subset) == g.n
    inv.emit({"minimally_bad": minimal, "verdict": verdict.as_json()}, str(minimal).lower())
    return inv.status(minimal)

def _generated(args: argparse.Namespace) -> Tuple[Graph, Optional[Dict]]:
    chosen = [x for x in (args.spec, args.prism, args.bracelet, args.named) if x]
    if len(chosen) != 1:
        raise UsageError("gen needs exactly one of --spec, --prism, --bracelet, --named")
    if args.spec:
        spec = ObstructionSpec.from_json(args.spec)
        return generate(spec), spec.as_json()
    if args.prism:
        return generate_prism(_ints(args.prism)), None
    if args.bracelet:
        return generate_bracelet(_ints(args.bracelet)), None
    if args.named not in NAMED_GRAPHS:
        raise UsageError(f"unknown graph '{args.named}', choose from {', '.join(NAMED_GRAPHS)}")
    return NAMED_GRAPHS[args.named](), None

def cmd_gen(inv: Invocation) -> int:
    g, spec = _generated(inv.args)
    payload = {"graph6": to_graph6(g), "n": g.n}
    if spec:
        payload["spec"] = spec
    inv.emit(payload, to_graph6(g))
    return 0

def cmd_contains_obstruction(inv: Invocation) -> int:
    found = contains_obstruction(inv.graph())
    if found is None:
        inv.emit({"found": False}, "none")
        return 0
    spec, embedding = found
    payload = {"found": True, "spec": spec.as_json(), "embedding": {str(k): v for k, v in embedding.items()}}
    text = f"{spec.family.value} {list(spec.params)} " + " ".join(f"{k}->{v}" for k, v in embedding.items())
    inv.emit(payload, text)
    return inv.status(True)

def cmd_is_good_clawfree(inv: Invocation) -> int:
    good = is_good_clawfree(inv.graph())
    inv.emit({"good": good}, "good" if good else "bad")
    return inv.status(not good)

def cmd_census(inv: Invocation) -> int:
    runner = Census(threads=inv.args.threads, oracle=inv.oracle, loud=inv.args.loud)
    entries = []
    for entry in runner.iter_entries(inv.args.max_n, inv.args.long_run):
        entries.append(entry)
        if inv.mode is OutputMode.JSON:
            print(json.dumps(entry.as_json()), file=inv.stdout, flush=True)
    report = CensusReport(inv.args.max_n, entries)
    summary = report.summary()
    if inv.mode is OutputMode.JSON:
        print(json.dumps({"summary": summary}), file=inv.stdout)
    else:
        for n, counts in summary["counts"].items():
            print(f"n={n}: {counts['graphs']} graphs, {counts['bad']} bad, {counts['minimally_bad']} minimally bad",
                  file=inv.stdout)
        for g6 in summary["minimally_bad"]:
            print(f"minimally bad: {g6}", file=inv.stdout)
        print(f"all minimally bad graphs have chi = 3: {summary['all_minimally_bad_chi3']}", file=inv.stdout)
    return inv.status(not report.all_minimally_bad_chi3)

def cmd_check_lemmas(inv: Invocation) -> int:
    g = inv.graph()
    verdicts = check_lemmas(g, inv.order(g, require_connected=True),
                            verify_minimal=inv.args.verify_minimal, oracle=inv.oracle)
    text = "\n".join(f"{v.lemma.value}: {'holds' if v.holds else 'FAILS ' + v.detail}" for v in verdicts)
    inv.emit([v.as_json() for v in verdicts], text)
    return inv.status(not all(v.holds for v in verdicts))

def cmd_search_all_bad(inv: Invocation) -> int:
    found = search_all_orders_bad(inv.args.max_n, claw_free=not inv.args.allow_claws, loud=inv.args.loud)
    codes = [to_graph6(g) for g in found]
    inv.emit({"graphs": codes}, "\n".join(codes) if codes else "none")
    return 0


COMMANDS: Dict[str, Tuple[Callable[[Invocation], int], bool, str]] = {
    "chi":                   (cmd_chi, True, "print the chromatic number"),
    "greedy":                (cmd_greedy, True, "greedy colouring along --order"),
    "gamma-c":               (cmd_gamma_c, True, "largest greedy colour count over connected orders"),
    "find-bad-order":        (cmd_find_bad_order, True, "a connected order using more than chi colours"),
    "is-good":               (cmd_is_good, True, "goodness verdict over all connected induced subgraphs"),
    "is-minimally-bad":      (cmd_is_minimally_bad, True, "bad, with every proper connected induced subgraph good"),
    "gen":                   (cmd_gen, False, "emit an obstruction, prism, bracelet or named graph"),
    "contains-obstruction":  (cmd_contains_obstruction, True, "first obstruction embedded as induced subgraph"),
    "is-good-clawfree":      (cmd_is_good_clawfree, True, "goodness of a claw-free graph by obstruction detection"),
    "census":                (cmd_census, False, "goodness census of all connected graphs up to --max-n"),
    "check-lemmas":          (cmd_check_lemmas, True, "structural lemma suite for a bad --order"),
    "search-all-bad":        (cmd_search_all_bad, False, "graphs in which every connected order is bad"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", dest="output", action="store_const", const="json", help="JSON output (default)")
    output.add_argument("--text", dest="output", action="store_const", const="text", help="human readable output")
    common.set_defaults(output="json")
    common.add_argument("--threads", type=int, default=1, help="worker threads for goodness checks")
    common.add_argument("--loud", action="store_true", help="trace search progress on stderr")
    common.add_argument("--fail-on-bad", action="store_true", help="exit 1 on bad findings")

    graph_input = _Parser(add_help=False)
    graph_input.add_argument("graph", nargs="?", help="inline graph6 string; stdin when omitted")
    graph_input.add_argument("--file", help="read the graph from this file")

    parser = _Parser(prog="pygoodgraphs", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    subparsers = {}
    for name, (_, takes_graph, help_text) in COMMANDS.items():
        parents = [common, graph_input] if takes_graph else [common]
        subparsers[name] = sub.add_parser(name, parents=parents, help=help_text)

    subparsers["greedy"].add_argument("--order", required=True, help="comma separated vertex order")
    subparsers["greedy"].add_argument("--start2", action="store_true", help="give the first vertex colour 2")
    subparsers["check-lemmas"].add_argument("--order", required=True, help="comma separated bad connected order")
    subparsers["check-lemmas"].add_argument("--verify-minimal", action="store_true",
                                            help="confirm minimal badness by brute force first")
    gen = subparsers["gen"]
    gen.add_argument("--spec", help='obstruction spec, e.g. \'{"family":"F2","params":[1]}\'')
    gen.add_argument("--prism", help="three path lengths l1,l2,l3")
    gen.add_argument("--bracelet", help="six path lengths p1,p2,q1,q2,pac,pbd")
    gen.add_argument("--named", help="gem, fish or claw")
    subparsers["census"].add_argument("--max-n", type=int, required=True)
    subparsers["census"].add_argument("--long-run", action="store_true", help="allow --max-n 8")
    subparsers["search-all-bad"].add_argument("--max-n", type=int, required=True)
    subparsers["search-all-bad"].add_argument("--allow-claws", action="store_true",
                                              help="also scan graphs containing a claw")
    return parser


def run(argv: List[str], stdin: TextIO=None, stdout: TextIO=None, stderr: TextIO=None) -> int:
    """Parses argv, dispatches one subcommand and returns the exit status"""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        inv = Invocation(args, stdin, stdout, stderr)
        return COMMANDS[args.command][0](inv)
    except SystemExit as done:
        return done.code or 0
    except UsageError as err:
        print(f"usage error: {err}", file=stderr)
        return 2
    except DOMAIN_ERRORS as err:
        print(f"error: {err}", file=stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=stderr)
        return 2

def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
