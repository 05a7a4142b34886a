"""Sweeping checks of the library's structural claims on exhaustive ranges.

Every check walks a family of instances and collects failures as
replayable payloads: a payload names the check, the parameters, and the
single instance that failed, and `replay` reruns exactly that instance.
Reports serialize without timing data, so two runs with the same
parameters produce byte-identical JSON.

Checks run sequentially; all iteration orders are sorted or otherwise
deterministic, and any sampling is seeded through the parameters.
"""

import json
import random
import time

from heckeposet import config, hecke, kernels, linalg
from heckeposet.permutations import (
    LEFT,
    RIGHT,
    Permutation,
    all_permutations,
    weak_interval,
    weak_leq,
)
from heckeposet.posets import (
    LabeledPoset,
    kp,
    poset_from_tableau,
    regular_schur_posets,
    schur_posets,
)
from heckeposet.qsym import (
    QSymElement,
    fundamental_monomial_table,
    involution,
    schur_to_f,
)
from heckeposet.shapes import (
    Composition,
    SkewPartition,
    balanced_generalized_composition,
    basic_skew_shapes,
    _conjugate,
)
from heckeposet.structure import (
    distinguished_filtration,
    equivalence_class,
    filtration_nonexistence_probe,
)
from heckeposet.tableaux import (
    Tableau,
    canonical_filling,
    enumerate_syt,
    reading,
    recording_tableau,
    recording_tableau_classes,
    rectify,
    schur_labelings,
)

# Labeled poset counts on [n]; sweeps refuse to run when the enumeration
# kernel disagrees with these, so a kernel bug cannot silently shrink a
# "zero failures" report.
POSET_COUNTS = {1: 1, 2: 3, 3: 19, 4: 219, 5: 4231, 6: 130023}


class CheckReport:
    """Outcome of one check run: instance count, failures, wall time.

    Failures are replayable payloads.  wall_time is informational only
    and deliberately left out of the JSON form.
    """

    __slots__ = ("check_id", "params", "instances", "failures", "wall_time")

    def __init__(self, check_id, params, instances, failures, wall_time):
        self.check_id = check_id
        self.params = dict(params)
        self.instances = instances
        self.failures = list(failures)
        self.wall_time = wall_time

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {
            "check_id": self.check_id,
            "params": self.params,
            "instances": self.instances,
            "failures": self.failures,
            "passed": self.passed,
        }

    def summary_line(self):
        status = "PASS" if self.passed else "FAIL"
        shown = {k: v for k, v in self.params.items() if k != "only"}
        return "%s %-22s %-38s instances=%-7d failures=%-4d %.2fs" % (
            status,
            self.check_id,
            json.dumps(shown, sort_keys=True),
            self.instances,
            len(self.failures),
            self.wall_time,
        )

    def __repr__(self):
        return "CheckReport(%s, %d instances, %d failures)" % (
            self.check_id,
            self.instances,
            len(self.failures),
        )


_REGISTRY = {}


def _register(check_id):
    def wrap(fn):
        _REGISTRY[check_id] = fn
        return fn

    return wrap


def check_ids():
    return sorted(_REGISTRY)


def run_check(check_id, params=None):
    if check_id not in _REGISTRY:
        raise ValueError(
            "unknown check %r; known: %s" % (check_id, ", ".join(check_ids()))
        )
    params = dict(params or {})
    start = time.perf_counter()
    instances, failures = _REGISTRY[check_id](params)
    wall = time.perf_counter() - start
    public = {k: v for k, v in params.items() if k != "only"}
    payloads = [
        {
            "check_id": check_id,
            "params": public,
            "instance": inst,
            "detail": detail,
        }
        for inst, detail in failures
    ]
    return CheckReport(check_id, params, instances, payloads, wall)


def replay(payload):
    """Rerun the single instance named by a failure payload."""
    params = dict(payload.get("params") or {})
    params["only"] = payload["instance"]
    return run_check(payload["check_id"], params)


SUITES = {
    "fast": (
        ("counts", {"n": 4}),
        ("bw", {"n": 4}),
        ("interval_description", {"max_size": 4}),
        ("example_4_3", {}),
        ("classes", {"n": 4}),
        ("rsp_classes", {"n": 4}),
        ("classification", {"n": 4}),
        ("dpc", {"n": 4}),
        ("filtration", {"max_size": 4}),
        ("example_6_2_table", {}),
        ("example_6_4", {}),
        ("kp_consistency", {"n": 4}),
        ("decomp", {"max_size": 4}),
    ),
    "full": (
        ("counts", {"n": 5}),
        ("bw", {"n": 5}),
        ("interval_description", {"max_size": 6}),
        ("classes", {"n": 5, "sample": 1000, "seed": 0}),
        ("rsp_classes", {"n": 5}),
        ("classification", {"n": 5}),
        ("dpc", {"n": 5}),
        ("filtration", {"max_size": 6}),
        ("kp_consistency", {"n": 5}),
        ("decomp", {"max_size": 6}),
        ("sec7_decomps", {}),
    ),
    "extended": (
        ("counts", {"n": 6}),
        ("dpc", {"n": 6}),
        ("table2", {"cap_dim": 500}),
    ),
}


def suite_plan(level):
    if level not in SUITES:
        raise ValueError("level must be one of %s" % ", ".join(sorted(SUITES)))
    plan = []
    if level in ("full", "extended"):
        plan.extend(SUITES["fast"])
    if level == "extended":
        plan.extend(SUITES["full"])
    plan.extend(SUITES[level])
    return plan


def run_suite(level="fast", progress=None):
    reports = []
    for check_id, params in suite_plan(level):
        report = run_check(check_id, params)
        reports.append(report)
        if progress is not None:
            progress(report)
    return reports


def reports_to_jsonl(reports):
    return "\n".join(
        json.dumps(r.to_json(), sort_keys=True, separators=(",", ":"), default=str)
        for r in reports
    )


# ---------------------------------------------------------------------------
# shared helpers


def _want(params, instance):
    only = params.get("only")
    return only is None or only == instance


def _perm(text):
    return Permutation(tuple(int(c) for c in text))


def _is_left_interval(perms):
    perms = list(perms)
    lengths = [p.length() for p in perms]
    lo, hi = min(lengths), max(lengths)
    bottoms = [p for p, l in zip(perms, lengths) if l == lo]
    tops = [p for p, l in zip(perms, lengths) if l == hi]
    if len(bottoms) != 1 or len(tops) != 1:
        return False
    bottom, top = bottoms[0], tops[0]
    if not weak_leq(bottom, top, LEFT):
        return False
    iv = weak_interval(bottom, top, LEFT)
    return len(iv.elements) == len(perms) and set(iv.elements) == set(perms)


def _tab_key(tab):
    """Deterministic JSON-able form of a tableau: sorted cell triples."""
    return [[r, c, v] for (r, c), v in sorted(tab.entries.items())]


def _fsum(comps):
    total = QSymElement.zero(sum(comps[0]))
    for c in comps:
        total = total + QSymElement.fundamental(Composition(c))
    return total


def _assert_counts(n):
    got = len(list(kernels.enumerate_posets(n)))
    if got != POSET_COUNTS[n]:
        raise RuntimeError(
            "poset enumeration for n=%d returned %d posets, expected %d; "
            "refusing to sweep" % (n, got, POSET_COUNTS[n])
        )


# ---------------------------------------------------------------------------
# checks


@_register("counts")
def _check_counts(params):
    n = params["n"]
    inst = {"n": n}
    if not _want(params, inst):
        return 0, []
    got = len(list(kernels.enumerate_posets(n)))
    failures = []
    if got != POSET_COUNTS[n]:
        failures.append((inst, "found %d posets, expected %d" % (got, POSET_COUNTS[n])))
    return 1, failures


@_register("bw")
def _check_bw(params):
    """A labeled poset's left linear extensions form a left weak order
    interval exactly when the poset is regular."""
    n = params["n"]
    _assert_counts(n)
    instances = 0
    failures = []
    for idx, up in enumerate(kernels.enumerate_posets(n)):
        inst = {"n": n, "index": idx}
        if not _want(params, inst):
            continue
        instances += 1
        words = kernels.linear_extension_words(up, n)
        interval = _is_left_interval(Permutation(w) for w in words)
        regular = kernels.is_regular(up, n)
        if interval != regular:
            covers = LabeledPoset(n, up).to_json()["covers"]
            failures.append(
                (
                    inst,
                    "covers=%s: interval=%s but regular=%s"
                    % (covers, interval, regular),
                )
            )
    return instances, failures


@_register("interval_description")
def _check_interval_description(params):
    """Extension sets of distinguished labelings are the predicted left
    intervals, and the distinguished readings of each standard tableau
    sweep out the predicted right interval."""
    max_size = params["max_size"]
    instances = 0
    failures = []
    for size in range(1, max_size + 1):
        for shape in basic_skew_shapes(size):
            t_row = canonical_filling(shape, "T_row")
            t_col = canonical_filling(shape, "T_col")
            dist = schur_labelings(shape, "distinguished")
            for tau in dist:
                inst = {
                    "part": "extensions",
                    "shape": str(shape),
                    "labeling": _tab_key(tau),
                }
                if not _want(params, inst):
                    continue
                instances += 1
                pos = poset_from_tableau(tau)
                lo = reading(tau, t_row)
                hi = reading(tau, t_col)
                good = weak_leq(lo, hi, LEFT) and set(
                    pos.linear_extensions(LEFT)
                ) == set(weak_interval(lo, hi, LEFT).elements)
                if not good:
                    failures.append(
                        (inst, "extensions differ from [%s, %s]_L" % (lo, hi))
                    )
            tau0 = canonical_filling(shape, "tau0")
            tau1 = canonical_filling(shape, "tau1")
            for t in enumerate_syt(shape):
                inst = {
                    "part": "readings",
                    "shape": str(shape),
                    "tableau": _tab_key(t),
                }
                if not _want(params, inst):
                    continue
                instances += 1
                got = {reading(tau, t) for tau in dist}
                lo = reading(tau0, t)
                hi = reading(tau1, t)
                good = weak_leq(lo, hi, RIGHT) and got == set(
                    weak_interval(lo, hi, RIGHT).elements
                )
                if not good:
                    failures.append(
                        (inst, "readings differ from [%s, %s]_R" % (lo, hi))
                    )
    return instances, failures


@_register("example_4_3")
def _check_example_4_3(params):
    inst = {"interval": ["2134", "2143"]}
    if not _want(params, inst):
        return 0, []
    iv = weak_interval(_perm("2134"), _perm("2143"), LEFT)
    cls = equivalence_class(iv)
    members = {(m.bottom.compact(), m.top.compact()) for m in cls.members()}
    problems = []
    if members != {("2134", "2143"), ("2314", "2413"), ("2341", "2431")}:
        problems.append("members %s" % sorted(members))
    if cls.class_size != 3:
        problems.append("class size %d" % cls.class_size)
    if (cls.min_interval.bottom.compact(), cls.min_interval.top.compact()) != (
        "2134",
        "2341",
    ):
        problems.append("min interval")
    if (cls.max_interval.bottom.compact(), cls.max_interval.top.compact()) != (
        "2143",
        "2431",
    ):
        problems.append("max interval")
    failures = [(inst, "; ".join(problems))] if problems else []
    return 1, failures


@_register("classes")
def _check_classes(params):
    """Every left interval's descent-preserving class has right-interval
    minima and maxima and the translation product form, and translations
    carry covers to covers with the same color."""
    n = params["n"]
    sample = params.get("sample")
    seed = params.get("seed", 0)
    perms = all_permutations(n)
    pairs = [(a, b) for a in perms for b in perms if weak_leq(a, b, LEFT)]
    pairs.sort(key=lambda ab: (ab[0].word, ab[1].word))
    if sample is not None and sample < len(pairs):
        rng = random.Random(seed)
        pairs = rng.sample(pairs, sample)
    instances = 0
    failures = []
    for a, b in pairs:
        inst = {"bottom": a.compact(), "top": b.compact()}
        if not _want(params, inst):
            continue
        instances += 1
        iv = weak_interval(a, b, LEFT)
        try:
            cls = equivalence_class(iv)
        except ValueError as exc:
            failures.append((inst, "class structure: %s" % exc))
            continue
        base_covers = set(iv.covers)
        for gamma in cls.bottoms:
            t = a.inverse() * gamma
            member = weak_interval(gamma, cls.xi * gamma, LEFT)
            translated = {(x * t, y * t, i) for (x, y, i) in base_covers}
            if translated != set(member.covers):
                failures.append(
                    (inst, "translation to %s breaks covers" % gamma.compact())
                )
                break
    return instances, failures


@_register("rsp_classes")
def _check_rsp_classes(params):
    """The extension sets of regular Schur posets are exactly the disjoint
    union, over basic shapes, of the class of the canonical labeling's
    interval."""
    n = params["n"]
    rsp_sets = {}
    for poset, tab in regular_schur_posets(n):
        rsp_sets[frozenset(poset.linear_extensions(LEFT))] = str(tab.shape)
    instances = 0
    failures = []
    seen = {}
    for shape in basic_skew_shapes(n):
        inst = {"shape": str(shape)}
        wanted = _want(params, inst)
        if wanted:
            instances += 1
        tau0 = canonical_filling(shape, "tau0")
        lo = reading(tau0, canonical_filling(shape, "T_row"))
        hi = reading(tau0, canonical_filling(shape, "T_col"))
        cls = equivalence_class(weak_interval(lo, hi, LEFT))
        for member in cls.members():
            key = frozenset(member.elements)
            if key in seen:
                if wanted:
                    failures.append(
                        (inst, "class overlaps the class of shape %s" % seen[key])
                    )
                continue
            seen[key] = str(shape)
            if wanted and key not in rsp_sets:
                failures.append(
                    (
                        inst,
                        "member [%s, %s]_L is no regular Schur poset's extensions"
                        % (member.bottom.compact(), member.top.compact()),
                    )
                )
    inst = {"part": "coverage", "n": n}
    if _want(params, inst):
        instances += 1
        if set(seen) != set(rsp_sets):
            failures.append(
                (
                    inst,
                    "%d class members vs %d poset extension sets"
                    % (len(seen), len(rsp_sets)),
                )
            )
    return instances, failures


@_register("classification")
def _check_classification(params):
    """Modules of regular Schur posets are isomorphic exactly for equal
    shapes, with verified projective covers and injective hulls, and the
    cover's kernel lies in the projective's radical."""
    n = params["n"]
    groups = {}
    for poset, tab in regular_schur_posets(n):
        groups.setdefault(tab.shape, []).append((poset, tab))
    shapes = sorted(groups, key=lambda s: (s.lam, s.mu))
    instances = 0
    failures = []
    for i, s1 in enumerate(shapes):
        for s2 in shapes[i + 1 :]:
            inst = {"part": "separation", "shapes": [str(s1), str(s2)]}
            if not _want(params, inst):
                continue
            instances += 1
            if schur_to_f(s1) != schur_to_f(s2):
                continue
            # same characteristic: the modules must be told apart by the
            # projective cover or the injective hull, i.e. by the bracket
            # multiset of a balanced label (a projective is the direct sum
            # of the indecomposable projectives named by its top)
            separated = any(
                sorted(balanced_generalized_composition(s1, kind).bracket())
                != sorted(balanced_generalized_composition(s2, kind).bracket())
                for kind in ("proj", "inj")
            )
            if not separated:
                m1 = hecke.poset_module(groups[s1][0][0])
                m2 = hecke.poset_module(groups[s2][0][0])
                result = hecke.is_isomorphic(m1, m2)
                if result.status != "not_iso":
                    failures.append(
                        (
                            inst,
                            "modules not separated: covers and hulls agree "
                            "and the direct test says %s" % result.status,
                        )
                    )
    for shape in shapes:
        members = groups[shape]
        base_poset, base_tab = members[0]
        base_mod = hecke.poset_module(base_poset)
        syt = enumerate_syt(shape)
        for poset, tab in members:
            inst = {
                "part": "same_shape",
                "shape": str(shape),
                "covers": poset.to_json()["covers"],
            }
            if not _want(params, inst):
                continue
            instances += 1
            try:
                mod = hecke.poset_module(poset)
                assignment = {reading(tab, t): reading(base_tab, t) for t in syt}
                iso = hecke.ModuleMap.from_label_map(mod, base_mod, assignment)
                if iso.rank() != mod.dim:
                    failures.append((inst, "relabeling map is not invertible"))
                    continue
                hecke.proj_cover_inj_hull(poset, verify=True)
            except ValueError as exc:
                failures.append((inst, str(exc)))
        inst = {"part": "cover_kernel", "shape": str(shape)}
        if _want(params, inst):
            instances += 1
            eta = hecke.cover_witness(base_poset)
            kernel = linalg.nullspace(eta.matrix, eta.source.dim)
            rad = hecke._radical_span(
                eta.source.mats, eta.source.maps, eta.source.dim, n
            )
            for vec in kernel:
                sparse = {c: v for c, v in enumerate(vec) if v}
                if not rad.contains(sparse):
                    failures.append(
                        (inst, "cover kernel vector escapes the radical")
                    )
                    break
    return instances, failures


@_register("dpc")
def _check_dpc(params):
    """A labeled poset is a regular Schur poset exactly when its left
    extension set is closed under dual Knuth equivalence."""
    n = params["n"]
    _assert_counts(n)
    classes = recording_tableau_classes(n)
    class_size = {}
    class_id = {}
    for idx, q in enumerate(sorted(classes, key=lambda t: sorted(t.entries.items()))):
        members = classes[q]
        for p in members:
            class_id[p.word] = idx
            class_size[idx] = len(members)
    schur_ups = {p.up for p, _ in schur_posets(n)}
    rsp_ups = {p.up for p, _ in regular_schur_posets(n)}
    instances = 0
    failures = []
    for idx, up in enumerate(kernels.enumerate_posets(n)):
        inst = {"n": n, "index": idx}
        if not _want(params, inst):
            continue
        instances += 1
        words = kernels.linear_extension_words(up, n)
        counts = {}
        for w in words:
            cid = class_id[w]
            counts[cid] = counts.get(cid, 0) + 1
        closed = all(counts[cid] == class_size[cid] for cid in counts)
        up_t = tuple(up)
        rsp = up_t in rsp_ups
        regular_schur = up_t in schur_ups and kernels.is_regular(up, n)
        if closed != rsp or rsp != regular_schur:
            covers = LabeledPoset(n, up).to_json()["covers"]
            failures.append(
                (
                    inst,
                    "covers=%s: closed=%s rsp=%s regular_schur=%s"
                    % (covers, closed, rsp, regular_schur),
                )
            )
    return instances, failures


@_register("filtration")
def _check_filtration(params):
    """Every regular Schur poset's module has a distinguished filtration;
    each layer's quotient is the Schur function of the rectification
    shape of the standard tableaux reading into that layer."""
    max_size = params["max_size"]
    instances = 0
    failures = []
    for size in range(1, max_size + 1):
        for poset, tab in regular_schur_posets(size):
            inst = {"n": size, "covers": poset.to_json()["covers"]}
            if not _want(params, inst):
                continue
            instances += 1
            try:
                filt = distinguished_filtration(poset)
            except ValueError as exc:
                failures.append((inst, "no filtration: %s" % exc))
                continue
            shape = tab.shape
            if filt.total_ch != schur_to_f(shape):
                failures.append((inst, "total differs from the shape's function"))
                continue
            layer_of = {}
            for k, layer in enumerate(filt.layers):
                for gamma in layer:
                    layer_of[gamma] = k
            bad = None
            for t in enumerate_syt(shape):
                gamma = reading(tab, t)
                k = layer_of.get(gamma)
                if k is None:
                    bad = "reading of a standard tableau misses every layer"
                    break
                if rectify(t).shape.lam != _conjugate(filt.shapes[k]):
                    bad = "rectification shape disagrees with the quotient"
                    break
                if filt.quotient_chars[k] != schur_to_f(_conjugate(filt.shapes[k])):
                    bad = "quotient is not the expected Schur function"
                    break
            if bad:
                failures.append((inst, bad))
    return instances, failures


@_register("example_6_2_table")
def _check_example_6_2_table(params):
    """The six-element module whose submodule table shows no Schur-valued
    three dimensional submodule, hence no distinguished filtration."""
    basis = ["2314", "1423", "3214", "2413", "1432", "3412"]
    mod = hecke.subset_module([_perm(w) for w in basis])
    label = {w: _perm(w) for w in basis}

    def vec(*pairs):
        return {label[w]: c for w, c in pairs}

    rows = [
        ([vec(("3214", 1)), vec(("1432", 1)), vec(("3412", 1))], 3,
         _fsum([(3, 1), (1, 3), (1, 2, 1)])),
        ([vec(("3214", 1)), vec(("1423", 1), ("1432", -1), ("2413", -1)),
          vec(("3412", 1))], 2, _fsum([(3, 1), (1, 1, 2), (1, 2, 1)])),
        ([vec(("3214", 1)), vec(("2314", 1), ("3214", -1), ("2413", -1)),
          vec(("3412", 1))], 2, _fsum([(3, 1), (2, 1, 1), (1, 2, 1)])),
        ([vec(("3214", 1)), vec(("2413", 1)), vec(("3412", 1))], 2,
         _fsum([(3, 1), (2, 2), (1, 2, 1)])),
        ([vec(("1432", 1)), vec(("1423", 1), ("1432", -1), ("2413", -1)),
          vec(("3412", 1))], 2, _fsum([(1, 3), (1, 1, 2), (1, 2, 1)])),
        ([vec(("1432", 1)), vec(("2314", 1), ("3214", -1), ("2413", -1)),
          vec(("3412", 1))], 2, _fsum([(1, 3), (2, 1, 1), (1, 2, 1)])),
        ([vec(("1432", 1)), vec(("2413", 1)), vec(("3412", 1))], 2,
         _fsum([(1, 3), (2, 2), (1, 2, 1)])),
        ([vec(("2314", 1), ("3214", -1)), vec(("2413", 1)), vec(("3412", 1))], 1,
         _fsum([(2, 1, 1), (2, 2), (1, 2, 1)])),
        ([vec(("1423", 1), ("1432", -1)), vec(("2413", 1)), vec(("3412", 1))], 1,
         _fsum([(1, 1, 2), (2, 2), (1, 2, 1)])),
    ]
    targets = [schur_to_f(SkewPartition((3, 1))), schur_to_f(SkewPartition((2, 1, 1)))]
    instances = 0
    failures = []

    inst = {"part": "characteristic"}
    if _want(params, inst):
        instances += 1
        expected = schur_to_f(SkewPartition((3, 1))) + schur_to_f(
            SkewPartition((2, 1, 1))
        )
        if hecke.characteristic(mod) != expected:
            failures.append((inst, "module characteristic is wrong"))

    inst = {"part": "socle"}
    if _want(params, inst):
        instances += 1
        report = hecke.radical_top_socle(mod)
        idx = mod.label_index()
        expected_rows = []
        for w in ["3412", "3214", "1432"]:
            row = [0] * mod.dim
            row[idx[label[w]]] = 1
            expected_rows.append(tuple(row))
        got = linalg.span_reduce(report["socle_basis"])[0]
        want = linalg.span_reduce(expected_rows)[0]
        if sorted(got) != sorted(want):
            failures.append((inst, "socle differs from the three line span"))

    for k, (vectors, soc_dim, expected_ch) in enumerate(rows, start=1):
        inst = {"part": "row", "row": k}
        if not _want(params, inst):
            continue
        instances += 1
        entry = hecke.verify_submodule(mod, vectors)
        problems = []
        if not entry["closed"]:
            problems.append("span is not a submodule")
        else:
            if entry["dim"] != 3:
                problems.append("dimension %d" % entry["dim"])
            if entry["sub_ch"] != expected_ch:
                problems.append("characteristic mismatch")
            if any(entry["sub_ch"] == t for t in targets):
                problems.append("characteristic is Schur, contradicting the table")
            dense = []
            idx = mod.label_index()
            for v in vectors:
                row = [0] * mod.dim
                for lbl, c in v.items():
                    row[idx[lbl]] = c
                dense.append(tuple(row))
            span_rows, _ = linalg.span_reduce(dense)
            sub_mats = hecke._restrict_mats(mod.mats, list(span_rows))
            sub = hecke.HeckeModule(mod.n, len(span_rows), sub_mats)
            soc = hecke.radical_top_socle(sub)["socle_basis"]
            if len(soc) != soc_dim:
                problems.append(
                    "socle dimension %d, table says %d" % (len(soc), soc_dim)
                )
        if problems:
            failures.append((inst, "; ".join(problems)))

    inst = {"part": "probe"}
    if _want(params, inst):
        instances += 1
        report = filtration_nonexistence_probe(
            mod, 3, targets, [vectors for vectors, _, _ in rows]
        )
        if report["any_target_achieved"]:
            failures.append((inst, "a table row realizes a Schur characteristic"))
    return instances, failures


@_register("example_6_4")
def _check_example_6_4(params):
    """Two total orders on the recording tableaux of the (4,2,1)/(2,1)
    poset both give distinguished filtrations with quotients s4, s31,
    s31, s22, s211."""
    shape = SkewPartition((4, 2, 1), (2, 1))
    pos = poset_from_tableau(canonical_filling(shape, "tau0"))
    q1 = Tableau.from_rows([[1], [2], [3], [4]])
    q2 = Tableau.from_rows([[1, 3], [2], [4]])
    q3 = Tableau.from_rows([[1, 4], [2], [3]])
    q4 = Tableau.from_rows([[1, 3], [2, 4]])
    q5 = Tableau.from_rows([[1, 3, 4], [2]])
    expected_shapes = ((1, 1, 1, 1), (2, 1, 1), (2, 1, 1), (2, 2), (3, 1))
    expected_quotients = [
        schur_to_f(SkewPartition(s))
        for s in [(4,), (3, 1), (3, 1), (2, 2), (2, 1, 1)]
    ]
    instances = 0
    failures = []

    inst = {"part": "interval"}
    if _want(params, inst):
        instances += 1
        ext = set(pos.linear_extensions(LEFT))
        iv = set(weak_interval(_perm("2134"), _perm("4321"), LEFT).elements)
        if ext != iv:
            failures.append((inst, "extensions are not [2134, 4321]_L"))

    for name, order, second in (
        ("first_order", [q1, q2, q3, q4, q5], q2),
        ("second_order", [q1, q3, q2, q4, q5], q3),
    ):
        inst = {"part": name}
        if not _want(params, inst):
            continue
        instances += 1
        try:
            filt = distinguished_filtration(pos, class_order=order)
        except ValueError as exc:
            failures.append((inst, str(exc)))
            continue
        problems = []
        if sorted(filt.shapes) != sorted(expected_shapes):
            problems.append("layer shapes %s" % (filt.shapes,))
        if list(filt.quotient_chars) != expected_quotients:
            problems.append("quotient sequence differs")
        if recording_tableau(filt.layers[1][0]) != second:
            problems.append("second layer is the wrong class")
        if problems:
            failures.append((inst, "; ".join(problems)))

    inst = {"part": "default_order"}
    if _want(params, inst):
        instances += 1
        filt = distinguished_filtration(pos)
        if list(filt.quotient_chars) != expected_quotients:
            failures.append((inst, "default order changes the quotient sequence"))
        elif recording_tableau(filt.layers[1][0]) != q2:
            failures.append((inst, "default order does not refine row readings"))
    return instances, failures


@_register("kp_consistency")
def _check_kp_consistency(params):
    """The fundamental expansion of a Schur poset's partition function
    matches the direct monomial tally, and the module characteristic is
    its image under the descent-reversing involution."""
    n = params["n"]
    instances = 0
    failures = []
    for poset, tab in schur_posets(n):
        inst = {"n": n, "covers": poset.to_json()["covers"]}
        if not _want(params, inst):
            continue
        instances += 1
        fundamental = kp(poset, "fundamental")
        monomial = kp(poset, "monomial", m=n)
        table = fundamental_monomial_table(fundamental, n)
        problems = []
        if monomial != table:
            problems.append("monomial oracle disagrees")
        ext = poset.linear_extensions(LEFT)
        if hecke.permutation_set_characteristic(ext) != involution(
            fundamental, "psi"
        ):
            problems.append("characteristic is not psi of the partition function")
        if problems:
            failures.append((inst, "; ".join(problems)))
    return instances, failures


@_register("decomp")
def _check_decomp(params):
    """Modules of regular Schur posets with connected shape are
    indecomposable."""
    max_size = params["max_size"]
    instances = 0
    failures = []
    for size in range(2, max_size + 1):
        for poset, tab in regular_schur_posets(size):
            if not tab.shape.is_connected():
                continue
            inst = {"n": size, "covers": poset.to_json()["covers"]}
            if not _want(params, inst):
                continue
            instances += 1
            mod = hecke.poset_module(poset)
            if not hecke.is_indecomposable(mod):
                failures.append(
                    (inst, "connected shape %s decomposes" % tab.shape)
                )
    return instances, failures


@_register("sec7_decomps")
def _check_sec7_decomps(params):
    """Three same-shape Schur labelings with pairwise non-isomorphic
    modules and their decompositions into indecomposables, one
    indecomposable tableau module, and one decomposable projective.

    The middle labeling is special: the natural five-summand candidate
    (four simples plus a two dimensional interval module) matches the
    module only in the Grothendieck group.  Its radical is one
    dimensional while the module's is three dimensional, so the check
    pins the refutation, the character-level agreement, and the actual
    splitting into a four dimensional indecomposable plus two simples.
    """
    shape = SkewPartition((4, 2), (2,))
    tau1 = Tableau(shape, {(1, 3): 2, (1, 4): 1, (2, 1): 4, (2, 2): 3})
    tau2 = Tableau(shape, {(1, 3): 4, (1, 4): 2, (2, 1): 3, (2, 2): 1})
    tau3 = Tableau(shape, {(1, 3): 4, (1, 4): 1, (2, 1): 3, (2, 2): 2})
    mods = {
        name: hecke.poset_module(poset_from_tableau(t))
        for name, t in [("tau1", tau1), ("tau2", tau2), ("tau3", tau3)]
    }
    tau2_candidate = hecke.direct_sum(
        hecke.simple_module((1, 2, 1)),
        hecke.interval_module(_perm("4213"), _perm("4312")),
        hecke.simple_module((3, 1)),
        hecke.simple_module((2, 2)),
        hecke.simple_module((4,)),
    )
    expected = {
        "tau1": hecke.direct_sum(hecke.projective((4,)), hecke.projective((2, 2))),
        "tau3": hecke.direct_sum(
            hecke.simple_module((1, 2, 1)),
            hecke.interval_module(_perm("4213"), _perm("4312")),
            hecke.interval_module(_perm("2431"), _perm("3421")),
            hecke.simple_module((4,)),
        ),
    }
    instances = 0
    failures = []
    for name in ("tau1", "tau3"):
        inst = {"part": "decomposition", "labeling": name}
        if not _want(params, inst):
            continue
        instances += 1
        result = hecke.is_isomorphic(mods[name], expected[name])
        if result.status != "iso":
            failures.append(
                (inst, "expected decomposition not matched: %s" % result.reason)
            )

    inst = {"part": "tau2_candidate_refuted"}
    if _want(params, inst):
        instances += 1
        m2 = mods["tau2"]
        problems = []
        if hecke.characteristic(m2) != hecke.characteristic_general(tau2_candidate):
            problems.append("candidate differs already in the Grothendieck group")
        result = hecke.is_isomorphic(m2, tau2_candidate)
        if result.status != "not_iso":
            failures.append(
                (inst, "five-summand candidate not refuted: %s" % result.status)
            )
        elif problems:
            failures.append((inst, "; ".join(problems)))

    inst = {"part": "tau2_true_decomposition"}
    if _want(params, inst):
        instances += 1
        m2 = mods["tau2"]
        lab = {w: _perm(w) for w in ("2413", "3412", "3421", "4231", "4312", "4321")}
        x_vectors = [
            {lab["2413"]: 1, lab["4231"]: -1},
            {lab["3412"]: 1, lab["4321"]: -1},
            {lab["3421"]: 1, lab["4321"]: -1},
            {lab["4312"]: 1, lab["4321"]: -1},
        ]
        line_f22 = [{lab["4231"]: 1, lab["4321"]: -1}]
        line_f4 = [{lab["4321"]: 1}]
        problems = []
        parts = []
        for name, vectors in (
            ("x", x_vectors),
            ("f22", line_f22),
            ("f4", line_f4),
        ):
            entry = hecke.verify_submodule(m2, vectors)
            if not entry["closed"] or entry["dim"] != len(vectors):
                problems.append("summand %s is not a submodule of its size" % name)
            parts.append(entry)
        idx = m2.label_index()
        dense = []
        for vectors in (x_vectors, line_f22, line_f4):
            for v in vectors:
                row = [0] * m2.dim
                for l, c in v.items():
                    row[idx[l]] = c
                dense.append(tuple(row))
        if linalg.rank(dense) != m2.dim:
            problems.append("summands do not span the module")
        if not problems:
            x_rows, _ = linalg.span_reduce(dense[:4])
            x_mod = hecke.HeckeModule(
                m2.n, 4, hecke._restrict_mats(m2.mats, list(x_rows))
            )
            if not hecke.is_indecomposable(x_mod):
                problems.append("the four dimensional summand decomposes")
            if parts[0]["sub_ch"] != _fsum([(2, 2), (1, 2, 1), (3, 1), (1, 3)]):
                problems.append("four dimensional summand has the wrong character")
            if parts[1]["sub_ch"] != _fsum([(2, 2)]):
                problems.append("first line is not the expected simple")
            if parts[2]["sub_ch"] != _fsum([(4,)]):
                problems.append("second line is not the expected simple")
        if problems:
            failures.append((inst, "; ".join(problems)))
    for a, b in (("tau1", "tau2"), ("tau1", "tau3"), ("tau2", "tau3")):
        inst = {"part": "pairwise", "labelings": [a, b]}
        if not _want(params, inst):
            continue
        instances += 1
        result = hecke.is_isomorphic(mods[a], mods[b])
        if result.status != "not_iso":
            failures.append((inst, "modules were not separated: %s" % result.status))
    inst = {"part": "connected_indecomposable"}
    if _want(params, inst):
        instances += 1
        mod = hecke.tableau_module(SkewPartition((3, 3, 1), (1, 1)))
        if not hecke.is_indecomposable(mod):
            failures.append((inst, "the (3,3,1)/(1,1) tableau module decomposes"))
    inst = {"part": "decomposable_projective"}
    if _want(params, inst):
        instances += 1
        from heckeposet.shapes import GeneralizedComposition

        star = GeneralizedComposition((Composition((2,)), Composition((2,))))
        mod = hecke.projective(star)
        problems = []
        if hecke.is_indecomposable(mod):
            problems.append("the module reports indecomposable")
        split = hecke.direct_sum(hecke.projective((2, 2)), hecke.projective((4,)))
        if hecke.is_isomorphic(mod, split).status != "iso":
            problems.append("expected splitting not found")
        if problems:
            failures.append((inst, "; ".join(problems)))
    return instances, failures


TABLE2_PAIRS = (
    ("426351", "624153"),
    ("354612", "561324"),
    ("356412", "561342"),
    ("563124", "534612"),
    ("536412", "563142"),
    ("465312", "645132"),
    ("564213", "546231"),
)


@_register("table2")
def _check_table2(params):
    """Seven pairs of same-characteristic intervals in S6 whose modules
    are nevertheless non-isomorphic (or at least never claimed
    isomorphic)."""
    cap = params.get("cap_dim", 500)
    old_cap = config.CAP_DIM
    config.CAP_DIM = max(config.CAP_DIM, cap)
    instances = 0
    failures = []
    try:
        bottom = Permutation.identity(6)
        for k, (w1, w2) in enumerate(TABLE2_PAIRS, start=1):
            inst = {"pair": k, "tops": [w1, w2]}
            if not _want(params, inst):
                continue
            instances += 1
            t1, t2 = _perm(w1), _perm(w2)
            ch1 = hecke.interval_characteristic(bottom, t1)
            ch2 = hecke.interval_characteristic(bottom, t2)
            problems = []
            if ch1 != ch2 or t1.descents(LEFT) != t2.descents(LEFT):
                problems.append("pair fails its stated necessary conditions")
            else:
                try:
                    m1 = hecke.interval_module(bottom, t1)
                    m2 = hecke.interval_module(bottom, t2)
                except ValueError as exc:
                    problems.append(str(exc))
                else:
                    result = hecke.is_isomorphic(m1, m2)
                    if result.status == "iso":
                        problems.append("modules claimed isomorphic")
                    elif result.status == "inconclusive":
                        problems.append(
                            "isomorphism test inconclusive: %s" % result.reason
                        )
            if problems:
                failures.append((inst, "; ".join(problems)))
    finally:
        config.CAP_DIM = old_cap
    return instances, failures
