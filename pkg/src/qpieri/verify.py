"""
Named verification suites with machine-readable reports.

Every suite exhaustively checks one family of guarantees over a bounded
universe and reports {suite, universe, checked, failures}; a nonempty
failure list means the guarantee is violated at the named instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .chains import (
    enumerate_markings,
    enumerate_monk_chains,
    enumerate_pieri_chains,
    is_marking,
    marking_count,
)
from .classical import (
    verify_monk_at_q0,
    verify_pieri_at_q0,
    verify_recurrence_at_q0,
)
from .expansion import expand_product_chain, pieri_expand
from .golden import EX1, EX2, expected_expansion, expected_table
from .permutations import Permutation, all_permutations
from .proofkit import bijections as bij
from .proofkit.classify import (
    dec1_base_low,
    dec2_base,
    in_class_e,
    in_class_f,
    in_class_g,
    f_refinement,
    monk_refinement,
    monk_side,
    s_refinement,
    y3_circle,
    y3_detail,
)
from .proofkit.identities import (
    check_divisor_compatibility,
    check_grand_cancellation,
    check_stage1_identity,
    check_stage2_identity,
)
from .proofkit.scanners import all_scans
from .proofkit.surgery import SurgeryError, check_p_conditions, delete, insert
from .proofkit.universe import (
    MarkedChain,
    PairedChain,
    enumerate_marked,
    enumerate_paired,
    marked_weight,
    weight,
)
from .qbg import QMonomial, edge_kind, edge_kind_by_length, validate_path
from .render import chains_table


@dataclass
class SuiteReport:
    suite: str
    universe: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def check(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(message)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "universe": self.universe,
            "checked": self.checked,
            "failures": self.failures,
        }


SUITES = (
    "appendix-c",
    "classical",
    "monk",
    "commutativity",
    "markings",
    "bijections",
    "lemmas",
    "insertion",
    "ledger",
    "edges",
)


def run_suite(name: str, max_n: int | None = None) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return _RUNNERS[name](max_n)


# --- appendix-c -------------------------------------------------------------


def _suite_appendix_c(max_n: int | None) -> SuiteReport:
    report = SuiteReport("appendix-c", "the two bundled worked examples")
    for ex in (EX1, EX2):
        w = Permutation.from_one_line(ex.w)
        got_table = chains_table(w, ex.k, ex.p)
        report.check(
            got_table == expected_table(ex),
            f"{ex.name}: chain table differs from the reference snapshot",
        )
        got = pieri_expand(w, ex.k, ex.p)
        report.check(
            got == expected_expansion(ex),
            f"{ex.name}: expansion differs from the reference",
        )
        report.check(
            got.render() == ex.expansion_text,
            f"{ex.name}: rendered expansion differs byte-wise",
        )
    return report


# --- classical --------------------------------------------------------------


def _suite_classical(max_n: int | None) -> SuiteReport:
    report = SuiteReport(
        "classical",
        "products over S_3 at columns 1..3, one S_5 spot check, divisor checks "
        "over S_3 at columns 1..2, column recurrences up to 4",
    )
    for w in all_permutations(3):
        for k in (1, 2, 3):
            for p in range(0, k + 1):
                report.check(
                    verify_pieri_at_q0(w, k, p),
                    f"product identity fails at Q=0 for w={w.one_line()}, k={k}, p={p}",
                )
    w = Permutation.from_one_line("32514")
    report.check(
        verify_pieri_at_q0(w, 3, 2),
        "product identity fails at Q=0 for w=32514, k=3, p=2",
    )
    for x in all_permutations(3):
        for k in (1, 2):
            report.check(
                verify_monk_at_q0(x, k),
                f"divisor identity fails at Q=0 for x={x.one_line()}, k={k}",
            )
    for k in (2, 3, 4):
        for p in range(1, k + 1):
            report.check(
                verify_recurrence_at_q0(k, p),
                f"column recurrence fails at Q=0 for k={k}, p={p}",
            )
    return report


# --- monk -------------------------------------------------------------------


def _suite_monk(max_n: int | None) -> SuiteReport:
    report = SuiteReport("monk", "Monk chains over S_3, columns 1..2")
    e = Permutation.identity()
    report.check(
        sorted(m.labels for m in enumerate_monk_chains(e, 1)) == [(), ((1, 2),)],
        "Monk chains from the identity at column 1 are not {empty, (1,2)}",
    )
    w321 = Permutation.from_one_line("321")
    report.check(
        len(enumerate_monk_chains(w321, 1)) == 8,
        "expected 8 Monk chains from 321 at column 1",
    )
    for x in all_permutations(3):
        for k in (1, 2):
            for m in enumerate_monk_chains(x, k):
                report.check(
                    validate_path(m.start, m.labels) is not None,
                    f"Monk chain fails path validation: {m!r}",
                )
            report.check(
                verify_monk_at_q0(x, k),
                f"divisor identity fails at Q=0 for x={x.one_line()}, k={k}",
            )
    return report


# --- commutativity ----------------------------------------------------------


def _suite_commutativity(max_n: int | None) -> SuiteReport:
    kmax = max_n or 3
    report = SuiteReport(
        "commutativity", f"w in S_3, factor pairs with columns <= {kmax}"
    )
    factors = [(k, p) for k in range(1, kmax + 1) for p in range(0, k + 1)]
    for w in all_permutations(3):
        for f1, f2 in itertools.product(factors, repeat=2):
            report.check(
                expand_product_chain(w, [f1, f2]) == expand_product_chain(w, [f2, f1]),
                f"factor order changes the expansion: w={w.one_line()}, {f1} vs {f2}",
            )
    return report


# --- markings ---------------------------------------------------------------


def _brute_force_marking_count(chain, p: int) -> int:
    return sum(
        1
        for subset in itertools.combinations(chain.labels, p)
        if is_marking(chain, frozenset(subset))
    )


def _suite_markings(max_n: int | None) -> SuiteReport:
    n = max_n or 4
    report = SuiteReport("markings", f"all chains over S_{n}, columns <= 3")
    for w in all_permutations(n):
        for k in (1, 2, 3):
            for chain in enumerate_pieri_chains(w, k):
                for p in range(0, k + 1):
                    brute = _brute_force_marking_count(chain, p)
                    closed = marking_count(chain, p)
                    listed = enumerate_markings(chain, p)
                    report.check(
                        closed == brute,
                        f"closed form {closed} != brute force {brute} "
                        f"for {chain!r}, p={p}",
                    )
                    report.check(
                        len(listed) == brute and all(is_marking(chain, M) for M in listed),
                        f"enumerated markings disagree with brute force for {chain!r}, p={p}",
                    )
    return report


# --- bijections -------------------------------------------------------------


def element_weight(x):
    if isinstance(x, PairedChain):
        return weight(x, len(x.marking))
    return marked_weight(x, len(x.marking))


def _weight_matches(inp, out, k: int, sign: int, qk_power: int) -> bool:
    win, wout = element_weight(inp), element_weight(out)
    if wout.basis != win.basis or wout.sign != sign * win.sign:
        return False
    qk = QMonomial.variable(k - 1)
    left = wout.qmono * (qk if qk_power < 0 else QMonomial.one())
    right = win.qmono * (qk if qk_power > 0 else QMonomial.one())
    return left == right


def _full_tag(q: PairedChain, k: int):
    """Complete stage-1+2 tag used to bucket a paired element."""
    level = q.chain.k
    if level == k - 1:
        base = dec2_base(q, k)
        if monk_side(q, k) == "X":
            return (base, "X")
        ref = monk_refinement(q, k)
        if ref != "Y3":
            return (base, ref)
        detail = y3_detail(q, k)
        if base.startswith("Bns") and detail == "(1)":
            return (base, "Y3", detail, y3_circle(q, k))
        return (base, "Y3", detail)
    return (dec1_base_low(q, k), monk_side(q, k))


def _bucket(universe, k: int):
    out: dict[tuple, set] = {}
    for q in universe:
        out.setdefault(_full_tag(q, k), set()).add(q)
    return out


def _collect(buckets, pred) -> set:
    out = set()
    for tag, elems in buckets.items():
        if pred(tag):
            out |= elems
    return out


def _check_bijection(report, name, domain, codomain, forward, inverse, k, sign, qk_power):
    images = set()
    for q in sorted(domain, key=repr):
        try:
            img = forward(q)
        except Exception as exc:  # guaranteed constructions must not fail
            report.fail(f"{name}: forward map raised on {q}: {exc}")
            return
        report.check(img in codomain, f"{name}: image outside codomain for {q}")
        report.check(
            _weight_matches(q, img, k, sign, qk_power),
            f"{name}: weight law fails for {q}",
        )
        try:
            back = inverse(img)
        except Exception as exc:
            report.fail(f"{name}: inverse raised on image of {q}: {exc}")
            return
        report.check(back == q, f"{name}: inverse does not return {q}")
        images.add(img)
    report.check(
        len(images) == len(domain),
        f"{name}: forward map is not injective ({len(images)} images, {len(domain)} inputs)",
    )
    report.check(
        images == set(codomain),
        f"{name}: image set differs from codomain "
        f"({len(images)} images vs {len(codomain)} targets)",
    )
    for q in sorted(codomain, key=repr):
        try:
            back = inverse(q)
        except Exception as exc:
            report.fail(f"{name}: inverse raised on {q}: {exc}")
            return
        report.check(forward(back) == q, f"{name}: forward(inverse) misses {q}")


def _check_involution(report, name, domain, mapping, k):
    for q in sorted(domain, key=repr):
        try:
            img = mapping(q)
        except Exception as exc:
            report.fail(f"{name}: raised on {q}: {exc}")
            return
        report.check(img in domain, f"{name}: image leaves the class for {q}")
        report.check(
            _weight_matches(q, img, k, -1, 0), f"{name}: weight law fails for {q}"
        )
        report.check(mapping(img) == q, f"{name}: not an involution at {q}")


def check_bijections_grid(report: SuiteReport, w: Permutation, k: int, p: int) -> None:
    """All eighteen matchings on (w, k, p), both marking levels."""
    for g in (p - 1, p):
        top = _bucket(enumerate_paired(w, k - 1, g, k), k)
        low = _bucket(enumerate_paired(w, k - 2, g - 1, k), k)

        def a_tags(t):
            return t[0] in ("A1", "A2", "A3")

        pairs = [
            ("pi1", _collect(top, lambda t: a_tags(t) and t[1] == "X"),
             _collect(top, lambda t: t[0] == "B1" and t[1] != "X"),
             bij.pi1, bij.pi1_inv, -1, 0),
            ("pi2", _collect(top, lambda t: a_tags(t) and t[1] != "X"),
             _collect(top, lambda t: t[0] == "B1" and t[1] == "X"),
             bij.pi2, bij.pi2_inv, -1, 1),
            ("pi3", _collect(top, lambda t: t[0] == "Bns1" and t[1] == "X"),
             _collect(low, lambda t: t[0] == "C" and t[1] == "Y"),
             bij.pi3, bij.pi3_inv, 1, -1),
            ("pi4", _collect(top, lambda t: t[0] == "Bns1" and t[1] != "X"),
             _collect(low, lambda t: t[0] == "C" and t[1] == "X"),
             bij.pi4, bij.pi4_inv, 1, 0),
            ("pi5", _collect(top, lambda t: t[0] in ("Bns2", "Bns3") and t[1] == "X"),
             _collect(low, lambda t: t[0] == "D11" and t[1] == "Y"),
             bij.pi5, bij.pi5_inv, 1, -1),
            ("pi6", _collect(top, lambda t: t[0] in ("Bns2", "Bns3") and t[1] != "X"),
             _collect(low, lambda t: t[0] == "D11" and t[1] == "X"),
             bij.pi6, bij.pi6_inv, 1, 0),
            ("pi7", _collect(low, lambda t: t[0] == "D12" and t[1] == "X"),
             _collect(low, lambda t: t[0] == "D2" and t[1] == "Y"),
             bij.pi7, bij.pi7_inv, -1, -1),
            ("pi8", _collect(low, lambda t: t[0] == "D12" and t[1] == "Y"),
             _collect(low, lambda t: t[0] == "D2" and t[1] == "X"),
             bij.pi8, bij.pi8_inv, -1, 0),
        ]
        for name, dom, cod, fwd, inv, sign, power in pairs:
            _check_bijection(
                report, f"{name}[w={w.one_line()},k={k},g={g}]",
                dom, cod, lambda q, f=fwd: f(q, k), lambda q, f=inv: f(q, k),
                k, sign, power,
            )

        cls_a = _collect(
            top,
            lambda t: (t[0] == "A1" and t[1] == "Y3")
            or (t[0] == "A2" and t[1] in ("empty", "Y2", "Y3"))
            or (t[0] == "A3" and t[1] == "Y3"),
        )
        _check_involution(
            report, f"theta1[w={w.one_line()},k={k},g={g}]", cls_a,
            lambda q: bij.theta1(q, k, dec2_base(q, k)), k,
        )
        circ2 = _collect(
            top, lambda t: len(t) == 4 and t[1] == "Y3" and t[3] == "c2"
        )
        _check_involution(
            report, f"theta2[w={w.one_line()},k={k},g={g}]", circ2,
            lambda q: bij.theta2(q, k, dec2_base(q, k)), k,
        )
        cls_b = _collect(
            top,
            lambda t: (t[0] == "Bns2" and t[1] in ("empty", "Y2"))
            or (t[0].startswith("Bns") and len(t) >= 3 and t[2] == "(2)"),
        )
        _check_involution(
            report, f"theta3[w={w.one_line()},k={k},g={g}]", cls_b,
            lambda q: bij.theta3(q, k, dec2_base(q, k), monk_refinement(q, k) == "Y3"),
            k,
        )
        circ1 = _collect(
            top, lambda t: len(t) == 4 and t[1] == "Y3" and t[3] == "c1"
        )
        d2y = _collect(low, lambda t: t[0] == "D2" and t[1] == "Y")
        _check_bijection(
            report, f"theta4[w={w.one_line()},k={k},g={g}]",
            d2y, circ1, lambda q: bij.theta4(q, k), lambda q: bij.theta4_inv(q, k),
            k, 1, 1,
        )

    # chi maps: fixed marking levels tied to p
    top_p = _bucket(enumerate_paired(w, k - 1, p, k), k)
    top_p1 = _bucket(enumerate_paired(w, k - 1, p - 1, k), k)
    level_k: dict[str, set] = {"R": set(), "S11": set(), "S12a": set(), "S12b": set(), "S2": set()}
    for mc in enumerate_marked(w, k, p):
        level_k[s_refinement(mc, k)].add(mc)
    f_split: dict[str, set] = {"F1": set(), "F21": set(), "F22": set()}
    for q in itertools.chain.from_iterable(top_p1.values()):
        if in_class_f(q, k):
            f_split[f_refinement(q, k)].add(q)

    a1y2_p = _collect(top_p, lambda t: t[0] == "A1" and t[1] == "Y2")
    a1y2_p1 = _collect(top_p1, lambda t: t[0] == "A1" and t[1] == "Y2")
    a1e_p = _collect(top_p, lambda t: t[0] == "A1" and t[1] == "empty")
    e_p = {q for q in itertools.chain.from_iterable(top_p.values()) if in_class_e(q, k)}
    e_p1 = {q for q in itertools.chain.from_iterable(top_p1.values()) if in_class_e(q, k)}
    g_p = {q for q in itertools.chain.from_iterable(top_p.values()) if in_class_g(q, k)}

    tag = f"[w={w.one_line()},k={k},p={p}]"
    _check_bijection(report, "chi1" + tag, a1y2_p, level_k["S2"],
                     lambda q: bij.chi1(q, k), lambda x: bij.chi1_inv(x, k), k, 1, 0)
    _check_bijection(report, "chi5" + tag, a1y2_p1, level_k["S11"],
                     lambda q: bij.chi5(q, k), lambda x: bij.chi5_inv(x, k), k, -1, 0)
    _check_bijection(report, "chi3" + tag, a1e_p, level_k["R"],
                     lambda q: bij.chi3(q, k), lambda x: bij.chi3_inv(x, k), k, 1, 0)
    _check_bijection(report, "chi4" + tag, g_p, f_split["F1"],
                     lambda q: bij.chi4(q, k), lambda x: bij.chi4_inv(x, k), k, -1, 0)
    _check_split_bijection(
        report, "chi2" + tag, e_p, level_k["S12b"], f_split["F22"],
        lambda q: bij.chi2(q, k), lambda x: bij.chi2_inv(x, k), k, 1, -1,
    )
    _check_split_bijection(
        report, "chi6" + tag, e_p1, level_k["S12a"], f_split["F21"],
        lambda q: bij.chi6(q, k), lambda x: bij.chi6_inv(x, k), k, -1, 1,
    )


def _check_split_bijection(report, name, domain, cod_marked, cod_paired,
                           forward, inverse, k, sign_marked, sign_paired):
    images = set()
    for q in sorted(domain, key=repr):
        try:
            img = forward(q)
        except Exception as exc:
            report.fail(f"{name}: forward map raised on {q}: {exc}")
            return
        if isinstance(img, MarkedChain):
            report.check(img in cod_marked, f"{name}: image outside level-k codomain for {q}")
            report.check(
                _weight_matches(q, img, k, sign_marked, 0),
                f"{name}: weight law fails (level-k branch) for {q}",
            )
        else:
            report.check(img in cod_paired, f"{name}: image outside chase codomain for {q}")
            report.check(
                _weight_matches(q, img, k, sign_paired, 0),
                f"{name}: weight law fails (chase branch) for {q}",
            )
        try:
            back = inverse(img)
        except Exception as exc:
            report.fail(f"{name}: inverse raised on image of {q}: {exc}")
            return
        report.check(back == q, f"{name}: inverse does not return {q}")
        images.add(img)
    targets = set(cod_marked) | set(cod_paired)
    report.check(len(images) == len(domain), f"{name}: not injective")
    report.check(
        images == targets,
        f"{name}: image set differs from codomain ({len(images)} vs {len(targets)})",
    )


def _suite_bijections(max_n: int | None) -> SuiteReport:
    report = SuiteReport(
        "bijections", "w in S_3, columns 2..3, all marking levels"
    )
    for w in all_permutations(3):
        for k in (2, 3):
            for p in range(1, k + 1):
                check_bijections_grid(report, w, k, p)
    return report


# --- lemmas -----------------------------------------------------------------


def _suite_lemmas(max_n: int | None) -> SuiteReport:
    n = max_n or 5
    report = SuiteReport("lemmas", f"forbidden patterns inside S_{n}")
    for scan in all_scans(n=n):
        report.checked += scan.checked
        if scan.name.endswith("-weakened"):
            if scan.clean and scan.checked:
                report.fail(f"{scan.name}: found nothing; scan has no sensitivity")
        elif not scan.clean:
            report.fail(f"{scan.name}: counterexample {scan.counterexamples[0]}")
    return report


# --- insertion --------------------------------------------------------------


def enumerate_surgery_paths(w: Permutation, k: int, bound: int):
    """Directed paths from w satisfying the surgery preconditions."""
    pool = sorted(
        set(
            [(a, b) for a in range(1, k) for b in range(k, bound + 1) if a < b]
            + [(k, b) for b in range(k + 1, bound + 1)]
        ),
        key=lambda lab: (-lab[1], lab[0]),
    )
    out = []

    def dfs(path):
        out.append(path)
        for lab in pool:
            if path.labels and (lab[1] > path.labels[-1][1] or lab in path.labels):
                continue
            nxt = path.extend(lab)
            if nxt is None:
                continue
            try:
                check_p_conditions(nxt, k)
            except SurgeryError:
                continue
            dfs(nxt)

    from .qbg import DirectedPath

    dfs(DirectedPath.empty(w))
    return out


def _suite_insertion(max_n: int | None) -> SuiteReport:
    n = max_n or 4
    bound = 5
    report = SuiteReport(
        "insertion", f"paths from S_{n} starts, columns <= {bound}, k <= 3"
    )
    for w in all_permutations(n):
        for k in (1, 2, 3):
            for path in enumerate_surgery_paths(w, k, bound):
                for d in range(k + 1, bound + 1):
                    try:
                        step = insert(path, k, d)
                    except SurgeryError:
                        continue
                    if not step.commuted:
                        report.check(
                            all(a != k for a, _ in step.path.labels),
                            f"absorbed insert kept a column label: {path!r} <- ({k},{d})",
                        )
                    back, dd = delete(step.path, k)
                    report.check(
                        back == path and dd == d,
                        f"delete(insert) misses: {path!r} <- ({k},{d})",
                    )
                try:
                    check_p_conditions(path, k, require_p3=True)
                except SurgeryError:
                    continue
                removed, d = delete(path, k)
                step = insert(removed, k, d)
                report.check(
                    step.path == path,
                    f"insert(delete) misses on {path!r}",
                )
    return report


# --- ledger -----------------------------------------------------------------


def _suite_ledger(max_n: int | None) -> SuiteReport:
    report = SuiteReport(
        "ledger", "assembled identities for w in S_3 at column 2"
    )
    for w in all_permutations(3):
        k = 2
        for p in (1, 2):
            for h, g in ((k - 1, p - 1), (k - 1, p), (k - 2, p - 1), (k - 2, p - 2)):
                report.check(
                    check_divisor_compatibility(w, h, g, k),
                    f"divisor compatibility fails: w={w.one_line()}, level ({h},{g})",
                )
            report.check(
                check_stage1_identity(w, k, p),
                f"stage-1 identity fails: w={w.one_line()}, k={k}, p={p}",
            )
            report.check(
                check_stage2_identity(w, k, p),
                f"stage-2 identity fails: w={w.one_line()}, k={k}, p={p}",
            )
            report.check(
                check_grand_cancellation(w, k, p),
                f"grand cancellation fails: w={w.one_line()}, k={k}, p={p}",
            )
    return report


# --- edges ------------------------------------------------------------------


def _suite_edges(max_n: int | None) -> SuiteReport:
    n = max_n or 6
    report = SuiteReport("edges", f"x in S_{n}, labels with column <= {n + 1}")
    for x in all_permutations(n):
        for a in range(1, n + 1):
            for b in range(a + 1, n + 2):
                report.check(
                    edge_kind(x, (a, b)) == edge_kind_by_length(x, (a, b)),
                    f"edge criteria disagree at x={x.one_line()}, label ({a},{b})",
                )
    return report


_RUNNERS = {
    "appendix-c": _suite_appendix_c,
    "classical": _suite_classical,
    "monk": _suite_monk,
    "commutativity": _suite_commutativity,
    "markings": _suite_markings,
    "bijections": _suite_bijections,
    "lemmas": _suite_lemmas,
    "insertion": _suite_insertion,
    "ledger": _suite_ledger,
    "edges": _suite_edges,
}
