"""Selection-fraction experiments over device typologies and bandwidths.

For a seeded population of synthetic users, each cell solves one program
per user and reports, over the union of selected objects, the fraction
carrying a text/audio/video component. Infeasible programs are counted as
skips. Every solved program is re-verified by the independent constraint
checker before it contributes to a report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import build_sdg
from .model import Catalog, DeviceProfile, SessionEnvironment
from .solver import InfeasibilityDiagnosis, check_program, filter_feasible, solve_blp

# typology name -> (video_enabled, audio_enabled, text_enabled)
DEVICE_TYPOLOGIES: dict[str, tuple[int, int, int]] = {
    "text-audio": (0, 1, 1),
    "text-video": (1, 0, 1),
    "audio-video": (1, 1, 0),
    "text-audio-video": (1, 1, 1),
}

# Representative effective bandwidth per regime, bytes per second.
REGIME_BANDWIDTH = {"low": 10_000, "medium": 55_000, "high": 150_000}

DEFAULT_USERS_PER_CELL = 50
DEVICE_CAP = 10 ** 9  # effectively unlimited; the network term dominates

CSV_HEADER = "typology,bandwidth_bytes_per_s,frac_text,frac_audio,frac_video,n_selected"


@dataclass(frozen=True)
class SyntheticUser:
    known_subjects: frozenset[str]
    target: str
    max_time: int


@dataclass(frozen=True)
class SelectionFractionRow:
    typology: str
    bandwidth: int
    frac_text: float
    frac_audio: float
    frac_video: float
    n_selected: int
    n_skipped: int


@dataclass(frozen=True)
class SelectionFractionReport:
    rows: tuple[SelectionFractionRow, ...]

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        for r in self.rows:
            lines.append(
                f"{r.typology},{r.bandwidth},{r.frac_text:.6f},{r.frac_audio:.6f},"
                f"{r.frac_video:.6f},{r.n_selected}"
            )
        return "\n".join(lines) + "\n"


def make_users(catalog: Catalog, seed: int,
               n_users: int = DEFAULT_USERS_PER_CELL) -> list[SyntheticUser]:
    """Seeded population with random known-subject sets and targets.

    Time budgets are drawn generously (5-8 hours) so that bandwidth, not
    time, is the binding constraint under study.
    """
    rng = random.Random(seed)
    ids = sorted(catalog.subject_by_id)
    users = []
    for _ in range(n_users):
        target = rng.choice(ids)
        known = frozenset(s for s in ids if s != target and rng.random() < 0.25)
        max_time = rng.randint(300, 480) * 60
        users.append(SyntheticUser(known, target, max_time))
    return users


def run_cell(catalog: Catalog, typology: str, bandwidth: int,
             users: list[SyntheticUser]) -> SelectionFractionRow:
    video_e, audio_e, text_e = DEVICE_TYPOLOGIES[typology]
    device = DeviceProfile("bench-device", DEVICE_CAP, video_e, audio_e, text_e)
    env = SessionEnvironment(bandwidth)

    selected: set[str] = set()
    skipped = 0
    for user in users:
        sdg = build_sdg(catalog, user.known_subjects, user.target)
        table = filter_feasible(sdg, catalog, device, env)
        result = solve_blp(sdg, table, user.max_time)
        if isinstance(result, InfeasibilityDiagnosis):
            skipped += 1
            continue
        problems = check_program(result, sdg, catalog, device, env, user.max_time)
        if problems:
            raise AssertionError(f"solver output failed verification: {problems}")
        selected.update(result.assignment.values())

    objs = [catalog.object_by_id[oid] for oid in selected]
    n = len(objs)
    if n == 0:
        # No program was solvable in this cell; fractions default to zero.
        return SelectionFractionRow(typology, bandwidth, 0.0, 0.0, 0.0, 0, skipped)
    return SelectionFractionRow(
        typology, bandwidth,
        frac_text=sum(o.text_component for o in objs) / n,
        frac_audio=sum(o.audio_component for o in objs) / n,
        frac_video=sum(o.video_component for o in objs) / n,
        n_selected=n,
        n_skipped=skipped,
    )


def run_device_matrix(catalog: Catalog, regime: str, seed: int = 0,
                      n_users: int = DEFAULT_USERS_PER_CELL) -> SelectionFractionReport:
    """One row per device typology at the regime's bandwidth."""
    if regime not in REGIME_BANDWIDTH:
        raise ValueError(f"unknown regime {regime!r}, expected one of {sorted(REGIME_BANDWIDTH)}")
    bandwidth = REGIME_BANDWIDTH[regime]
    users = make_users(catalog, seed, n_users)
    rows = tuple(
        run_cell(catalog, typology, bandwidth, users) for typology in DEVICE_TYPOLOGIES
    )
    return SelectionFractionReport(rows)


def run_bandwidth_sweep(catalog: Catalog, bandwidth_points: list[int], seed: int = 0,
                        n_users: int = DEFAULT_USERS_PER_CELL,
                        typology: str = "text-audio-video") -> SelectionFractionReport:
    """Full-capability device across a bandwidth grid; same users per point."""
    users = make_users(catalog, seed, n_users)
    rows = tuple(
        run_cell(catalog, typology, int(b), users) for b in bandwidth_points
    )
    return SelectionFractionReport(rows)
