"""
명령줄 진입점
- kmst approx|plane|steiner|two-weight|sp|tree|convex|circle
- ktree diam / hu comm|diamcost / oracle kmst|diam|hu
- gen steiner|sat3|is|fig2|fig4|random
종료 코드: 0 성공, 1 사용법/파싱 오류, 2 해 없음
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import sys
from pathlib import Path
from typing import Optional, TextIO

from components.errors import ArgumentError, KmstError
from components.utils import EXIT_OK, EXIT_USAGE, describe_error, format_number, setup_logging
from config import LOG_LEVEL
from graph_core import KTreeSolution, PointSet2D
from instance_gen import (
    gen_3sat_diamcost,
    gen_fig2,
    gen_fig4,
    gen_is_to_comm_ktree,
    gen_random,
    gen_steiner_to_kmst,
    KINDS,
    WEIGHT_VARIANTS,
)
from instance_io import format_instance, read_instance, write_instance
from oracles import OBJECTIVES
from runner import RunReport, SolverRunner
from svg_render import emit_svg

logger = logging.getLogger(__name__)

COMMANDS = {
    "kmst": ("approx", "plane", "steiner", "two-weight", "sp", "tree", "convex", "circle"),
    "ktree": ("diam",),
    "hu": ("comm", "diamcost"),
    "oracle": ("kmst", "diam", "hu"),
    "gen": ("steiner", "sat3", "is", "fig2", "fig4", "random"),
}
GEOMETRIC = {"plane", "convex", "circle"}


class _Parser(argparse.ArgumentParser):
    """사용법 오류를 종료 코드 1 로"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", help="graph file (`n m` + `u v w` lines)")
    parser.add_argument("--points", help="point file (`n metric` + `x y` lines)")
    parser.add_argument("--hu", help="Hu instance file (`n` + `i j d r` lines)")
    parser.add_argument("--parse", help="series-parallel parse tree file (s-expression)")
    parser.add_argument("--k", type=int)
    parser.add_argument("--metric", choices=("euclidean", "rectilinear"))
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--svg", help="write an SVG drawing of a geometric solution")
    parser.add_argument("--oracle", action="store_true", help="attach the oracle value and ratio")
    parser.add_argument("--out", help="output file")
    parser.add_argument("--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kmst_lab", description="k-MST, short trees and instance generators")
    groups = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for command, methods in COMMANDS.items():
        sub = groups.add_parser(command)
        sub.add_argument("method", choices=methods)
        _common(sub)
        if command in ("kmst", "oracle", "gen"):
            sub.add_argument("--terminals", help="comma-separated terminal ids")
        if command == "oracle":
            sub.add_argument("--objective", choices=OBJECTIVES, default="comm")
        if command == "gen":
            sub.add_argument("--M", type=int, dest="M")
            sub.add_argument("--variant", choices=WEIGHT_VARIANTS, default="01inf")
            sub.add_argument("--formula", help="3-CNF text, e.g. '(x | ~y | z) & (y | z | w)'")
            sub.add_argument("--a", type=float, default=1.0)
            sub.add_argument("--c", type=float, default=1.0)
            sub.add_argument("--d-far", type=float, default=5.0)
            sub.add_argument("--opt-scale", type=float, default=1.0)
            sub.add_argument("--sigma", type=float, default=1.0)
            sub.add_argument("--kind", choices=KINDS, default="graph")
            sub.add_argument("--param", action="append", default=[], help="generator parameter key=value")
    return parser


# ========== 입력 헬퍼 ==========

def _need(args, name: str, kind: str):
    path = getattr(args, name)
    if not path:
        raise ArgumentError(f"`{args.command} {args.method}` needs --{name} FILE")
    return read_instance(path, kind)


def _need_k(args) -> int:
    if args.k is None:
        raise ArgumentError(f"`{args.command} {args.method}` needs --k INT")
    return args.k


def _points(args) -> PointSet2D:
    ps = _need(args, "points", "points")
    return ps.with_metric(args.metric) if args.metric else ps


def _terminals(args) -> Optional[list[int]]:
    if not args.terminals:
        return None
    try:
        return [int(x) for x in args.terminals.split(",") if x.strip()]
    except ValueError:
        raise ArgumentError(f"--terminals must be comma-separated integers, got {args.terminals!r}") from None


def _param_value(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    if text.lower() in ("true", "false"):
        return text.lower() == "true"
    if "," in text:
        return [_param_value(x) for x in text.split(",")]
    return text


def _params(args) -> dict:
    params = {}
    for item in args.param:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ArgumentError(f"--param expects key=value, got {item!r}")
        params[key.strip()] = _param_value(value.strip())
    if args.metric:
        params.setdefault("metric", args.metric)
    return params


# ========== 출력 ==========

def format_report(solution: KTreeSolution, report: RunReport) -> str:
    """첫 줄 `cost` 또는 `diameter`, 이어서 `edge u v`, 마지막에 오라클/비율 주석"""
    head = "diameter" if report.objective == "diameter" else "cost"
    lines = [f"{head} {format_number(report.value)}"]
    lines += [f"edge {u} {v}" for u, v, _ in solution.edges]
    if not solution.edges:
        lines += [f"vertex {v}" for v in sorted(solution.vertices)]
    lines += [f"# flag {flag}" for flag in solution.flags]
    lines += report.lines()
    return "\n".join(lines) + "\n"


def _emit(text: str, args, stdout: TextIO) -> None:
    stdout.write(text)
    if args.out:
        target = Path(args.out)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")


# ========== 명령 처리 ==========

def _solve(args, runner: SolverRunner):
    method = args.method
    if args.command == "kmst":
        if method in GEOMETRIC:
            ps = _points(args)
            solve = {"plane": runner.kmst_plane, "convex": runner.kmst_convex, "circle": runner.kmst_circle}[method]
            solution, report = solve(ps, _need_k(args))
            if args.svg:
                emit_svg(solution, ps, args.svg)
            return solution, report
        if method == "sp":
            return runner.kmst_sp(_need(args, "parse", "sp"), _need_k(args))
        g = _need(args, "graph", "graph")
        if method == "steiner":
            terminals = _terminals(args)
            if terminals is None:
                raise ArgumentError("`kmst steiner` needs --terminals")
            return runner.kmst_steiner(g, terminals, _need_k(args))
        solve = {"approx": runner.kmst_approx, "two-weight": runner.kmst_two_weight, "tree": runner.kmst_tree}[method]
        return solve(g, _need_k(args))
    if args.command == "ktree":
        return runner.ktree_diam(_need(args, "graph", "graph"), _need_k(args))
    if args.command == "hu":
        inst = _need(args, "hu", "hu")
        return runner.hu_comm(inst) if method == "comm" else runner.hu_diamcost(inst)
    # oracle
    if method == "kmst":
        instance = _points(args) if args.points else _need(args, "graph", "graph")
        solution, report = runner.oracle_kmst(instance, _need_k(args), _terminals(args))
        if args.svg and isinstance(instance, PointSet2D):
            emit_svg(solution, instance, args.svg)
        return solution, report
    if method == "diam":
        return runner.oracle_diam(_need(args, "graph", "graph"), _need_k(args))
    return runner.oracle_hu(_need(args, "hu", "hu"), args.objective)


def _generate(args) -> tuple[object, list[str]]:
    """(인스턴스, 메타데이터 주석 줄)"""
    method = args.method
    if method == "steiner":
        g = _need(args, "graph", "graph")
        terminals = _terminals(args)
        if terminals is None or args.M is None:
            raise ArgumentError("`gen steiner` needs --terminals and --M")
        produced, k, budget, cert = gen_steiner_to_kmst(g, terminals, args.M, args.variant)
        return produced, [f"# k {k}", f"# budget {format_number(budget)}", f"# X {cert.parameters['X']}"]
    if method == "sat3":
        if not args.formula:
            raise ArgumentError("`gen sat3` needs --formula")
        inst, threshold, _ = gen_3sat_diamcost(args.formula, a=args.a, c=args.c, d_far=args.d_far)
        return inst, [f"# threshold {format_number(threshold)}"]
    if method == "is":
        g = _need(args, "graph", "graph")
        inst, cert = gen_is_to_comm_ktree(g, _need_k(args), args.M if args.M is not None else 1)
        return inst, [f"# k {cert.parameters['k']}", f"# threshold {format_number(cert.threshold)}"]
    if method == "fig2":
        g, known = gen_fig2(_need_k(args), args.opt_scale)
        return g, [f"# known_opt {format_number(known)}"]
    if method == "fig4":
        ps, bound = gen_fig4(_need_k(args), args.sigma, args.seed)
        if args.metric:
            ps = ps.with_metric(args.metric)
        return ps, [f"# known_opt_bound {format_number(bound)}"]
    return gen_random(args.kind, _params(args), args.seed), []


def _dispatch(args, stdout: TextIO) -> int:
    if args.command == "gen":
        instance, notes = _generate(args)
        if args.out:
            write_instance(instance, args.out)
            stdout.write("\n".join(notes) + "\n" if notes else "")
        else:
            stdout.write(format_instance(instance) + "".join(note + "\n" for note in notes))
        return EXIT_OK
    runner = SolverRunner(oracle=args.oracle)
    solution, report = _solve(args, runner)
    _emit(format_report(solution, report), args, stdout)
    return EXIT_OK


def run_command(argv, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    명령 실행

    Args:
        argv: 인자 목록 (프로그램 이름 제외)
        stdout: 보고서 출력 스트림 (기본 sys.stdout)
        stderr: 진단 출력 스트림 (기본 sys.stderr)

    Returns:
        종료 코드
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = build_parser().parse_args(list(argv))
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_USAGE

    setup_logging("DEBUG" if args.verbose else LOG_LEVEL)
    try:
        return _dispatch(args, stdout)
    except (KmstError, OSError) as e:
        code, message = describe_error(e)
        stderr.write(message + "\n")
        return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
