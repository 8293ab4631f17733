"""Acceptance gate: one test per shipped guarantee, one printed line each.

Every test prints ``acceptance criterion N (<name>): PASS|FAIL`` so the
suite output doubles as the acceptance report.
"""

import random
import time

from conftest import random_dag_catalog, random_instance, sdg_chain_oracle
from test_xmlio import random_catalog_doc, random_message, random_profile

from skillplan.corpus import CorpusSpec, generate_corpus
from skillplan.experiments import (
    DEVICE_TYPOLOGIES,
    run_bandwidth_sweep,
    run_device_matrix,
)
from skillplan.graph import build_sdg
from skillplan.model import (
    DeviceProfile,
    LearningProgram,
    SessionEnvironment,
    Skill,
    UserProfile,
    validate_catalog,
)
from skillplan.session import SeededPolicy, replay, run_session
from skillplan.solver import (
    brute_force_blp,
    check_program,
    filter_feasible,
    solve_blp,
)
from skillplan.xmlio import (
    decode_acml,
    encode_acml,
    parse_catalog,
    parse_uda_ontology,
    serialize_catalog,
    serialize_uda_ontology,
)


def _report(capsys, number, name, fn):
    try:
        fn()
    except BaseException:
        with capsys.disabled():
            print(f"acceptance criterion {number} ({name}): FAIL")
        raise
    with capsys.disabled():
        print(f"acceptance criterion {number} ({name}): PASS")


def test_criterion_1_solver_exactness(capsys):
    def run():
        rng = random.Random(1001)
        started = time.perf_counter()
        for _ in range(500):
            sdg, table, max_time = random_instance(
                rng, max_subjects=5, max_objects=4, max_duration=200)
            got = solve_blp(sdg, table, max_time)
            want = brute_force_blp(sdg, table, max_time)
            if isinstance(want, LearningProgram):
                assert isinstance(got, LearningProgram)
                assert got.objective_value == want.objective_value
                assert got.assignment == want.assignment
            else:
                assert not isinstance(got, LearningProgram)
                assert got.kind == want.kind
        assert time.perf_counter() - started < 10.0

    _report(capsys, 1, "solver exactness vs brute force", run)


def test_criterion_2_constraint_soundness(capsys):
    def run():
        rng = random.Random(1002)
        device = DeviceProfile("d", 10 ** 7, 1, 1, 1)
        solved = 0
        while solved < 1000:
            cat = random_dag_catalog(rng, with_objects=True)
            ids = sorted(cat.subject_by_id)
            sdg = build_sdg(cat, frozenset(), rng.choice(ids))
            env = SessionEnvironment(rng.choice([30, 100, 1000, 10 ** 6]))
            table = filter_feasible(sdg, cat, device, env)
            max_time = rng.randint(100, 2000)
            result = solve_blp(sdg, table, max_time)
            if not isinstance(result, LearningProgram):
                continue
            assert check_program(result, sdg, cat, device, env, max_time) == []
            solved += 1

    _report(capsys, 2, "constraint checker finds zero violations", run)


def test_criterion_3_graph_oracle_equivalence(capsys):
    def run():
        rng = random.Random(1003)
        for _ in range(300):
            cat = random_dag_catalog(rng, max_subjects=8)
            ids = sorted(cat.subject_by_id)
            target = rng.choice(ids)
            known = frozenset(s for s in ids if rng.random() < 0.3)
            g = build_sdg(cat, known, target)
            nodes, arcs = sdg_chain_oracle(cat, known, target)
            assert g.nodes == nodes
            assert g.arcs == arcs

    _report(capsys, 3, "dependency graph matches chain-union oracle", run)


def test_criterion_4_low_bandwidth_selection_pattern(capsys):
    def run():
        started = time.perf_counter()
        cat = generate_corpus(CorpusSpec())
        report = run_device_matrix(cat, "low", seed=0)
        assert len(report.rows) == 4
        for row in report.rows:
            assert row.frac_video == 0.0, row
            _, _, text_enabled = DEVICE_TYPOLOGIES[row.typology]
            if text_enabled:
                assert row.n_selected > 0
                assert row.frac_text >= 0.8, row
        assert time.perf_counter() - started < 60.0

    _report(capsys, 4, "low-bandwidth matrix: no video, text dominates", run)


def test_criterion_5_bandwidth_sweep_trends(capsys):
    def run():
        cat = generate_corpus(CorpusSpec())
        points = [10_000 * k for k in range(1, 21)]  # 10..200 kB/s
        report = run_bandwidth_sweep(cat, points, seed=0)
        video = [r.frac_video for r in report.rows]
        assert video == sorted(video)
        assert video[0] == 0.0
        assert video[-1] >= 0.6
        for row in report.rows:
            assert row.frac_text >= 0.8, row
            if row.bandwidth >= 50_000:
                assert row.frac_audio >= 0.6, row

    _report(capsys, 5, "sweep: video rises monotonically, text/audio floors", run)


def test_criterion_6_codec_round_trips(capsys):
    def run():
        rng = random.Random(1006)
        for _ in range(500):
            device, user = random_profile(rng)
            assert parse_uda_ontology(serialize_uda_ontology(device, user)) \
                == (device, user)
        for _ in range(500):
            cat = random_catalog_doc(rng)
            assert parse_catalog(serialize_catalog(cat)) == cat
        for _ in range(500):
            msg = random_message(rng)
            assert decode_acml(encode_acml(msg)) == msg
        # The fixed skill-list request message decodes to the documented
        # value and re-encodes deterministically.
        from test_xmlio import test_skill_list_request_message_decodes
        test_skill_list_request_message_decodes()
        rng2 = random.Random(99)
        msg = random_message(rng2)
        assert encode_acml(decode_acml(encode_acml(msg))) == encode_acml(msg)

    _report(capsys, 6, "codec round-trip identities", run)


def _session_fixture(rng):
    """Random small catalog with one skill spanning all subjects."""
    while True:
        cat = random_dag_catalog(rng, max_subjects=5, with_objects=True)
        ids = sorted(cat.subject_by_id)
        skill = Skill("goal", tuple(ids))  # ascending ids respect prereqs
        cat = type(cat)(cat.subjects, cat.learning_objects, (skill,))
        if validate_catalog(cat).ok:
            return cat


def test_criterion_7_session_determinism_and_resumption(capsys):
    def run():
        rng = random.Random(1007)
        device = DeviceProfile("d", 10 ** 7, 1, 1, 1)
        env = SessionEnvironment(10 ** 6)
        for i in range(100):
            cat = _session_fixture(rng)
            user = UserProfile("u", None, frozenset(), frozenset(), 10 ** 5)
            one_shot = run_session(cat, device, user, env,
                                   SeededPolicy(i).as_policy())
            # Replay determinism over the recorded transcript of events.
            assert replay(cat, device, user, env, one_shot.events) \
                == one_shot.state
            # Interrupt at a random prefix of the event log and resume
            # from the reconstructed profile with the same seeded policy.
            cut = rng.randint(1, len(one_shot.events))
            mid = replay(cat, device, user, env, one_shot.events[:cut])
            if "goal" in mid.user.acquired_skill_set:
                resumed_profile = mid.user  # the prefix already finished
            else:
                resumed_profile = run_session(
                    cat, device, mid.user, env, SeededPolicy(i).as_policy()
                ).profile
            assert resumed_profile.known_subject_set \
                == one_shot.profile.known_subject_set
            assert resumed_profile.acquired_skill_set \
                == one_shot.profile.acquired_skill_set

    _report(capsys, 7, "interrupted sessions resume to identical profiles", run)


def test_criterion_8_corpus_component_fractions(capsys):
    def run():
        spec = CorpusSpec(n_subjects=100, objects_per_subject=20)  # 2000 objects
        cat = generate_corpus(spec)
        n = len(cat.learning_objects)
        assert n == 2000
        for attr, p in (("text_component", spec.p_text),
                        ("audio_component", spec.p_audio),
                        ("video_component", spec.p_video)):
            frac = sum(getattr(o, attr) for o in cat.learning_objects) / n
            assert abs(frac - 0.72) <= 0.03, (attr, frac)

    _report(capsys, 8, "corpus media-component fractions near 0.72", run)
