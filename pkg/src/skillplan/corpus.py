"""Seeded synthetic catalog generator.

The defaults are tuned so that the low/medium/high bandwidth regimes show
the qualitative selection patterns the experiments look for:

* objects carrying video sit in discrete bitrate tiers starting at 44 kB/s,
  with small additive bonuses for extra audio/text streams, so video never
  competes below 44 kB/s and richer variants win within a tier;
* audio+text objects span 8-40 kB/s;
* audio-only objects split into a low-rate band and a narrow 41-43 kB/s
  band (kept below the video tiers);
* text-only objects span 0.5-5 kB/s.

Durations snap to a whole-minute grid, which keeps the solver's scaled
integer profits small enough for the compiled kernel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .model import Catalog, LearningObject, Skill, Subject

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class CorpusSpec:
    seed: int = DEFAULT_SEED
    n_subjects: int = 30
    objects_per_subject: int = 20
    p_text: float = 0.72
    p_audio: float = 0.72
    p_video: float = 0.72
    # bitrate model, bytes per second
    text_range: tuple[int, int] = (500, 5_000)
    audio_range: tuple[int, int] = (8_000, 40_000)
    audio_only_low_range: tuple[int, int] = (600, 2_000)
    audio_only_high_range: tuple[int, int] = (41_000, 43_000)
    audio_only_low_share: float = 0.3
    video_tiers: tuple[int, ...] = (44_000, 75_000, 115_000, 155_000)
    video_audio_bonus: int = 3_000
    video_text_bonus: int = 1_500
    duration_range: tuple[int, int] = (120, 600)  # seconds
    duration_step: int = 60
    n_layers: int = 6
    skill_count: int = 5
    skill_size_range: tuple[int, int] = (3, 8)

    def validate(self) -> None:
        for p in (self.p_text, self.p_audio, self.p_video):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"probability out of range: {p}")
        if self.p_text == self.p_audio == self.p_video == 0.0:
            raise ValueError("at least one media component must have positive probability")
        for lo, hi in (self.text_range, self.audio_range, self.audio_only_low_range,
                       self.audio_only_high_range, self.duration_range):
            if not 0 < lo <= hi:
                raise ValueError(f"invalid range ({lo}, {hi})")
        if self.n_subjects < 1 or self.objects_per_subject < 1:
            raise ValueError("need at least one subject and one object per subject")


def _draw_components(rng: random.Random, spec: CorpusSpec) -> tuple[int, int, int]:
    text = int(rng.random() < spec.p_text)
    audio = int(rng.random() < spec.p_audio)
    video = int(rng.random() < spec.p_video)
    if not (text or audio or video):
        # Force one component, chosen among those with positive probability.
        candidates = [name for name, p in (("text", spec.p_text), ("audio", spec.p_audio),
                                           ("video", spec.p_video)) if p > 0]
        forced = rng.choice(candidates)
        text = int(forced == "text")
        audio = int(forced == "audio")
        video = int(forced == "video")
    return text, audio, video


def _draw_bitrate(rng: random.Random, spec: CorpusSpec,
                  text: int, audio: int, video: int) -> float:
    if video:
        tier = rng.choice(spec.video_tiers)
        return tier + audio * spec.video_audio_bonus + text * spec.video_text_bonus
    if audio and text:
        return rng.uniform(*spec.audio_range)
    if audio:
        if rng.random() < spec.audio_only_low_share:
            return rng.uniform(*spec.audio_only_low_range)
        return rng.uniform(*spec.audio_only_high_range)
    return rng.uniform(*spec.text_range)


def _draw_duration(rng: random.Random, spec: CorpusSpec) -> int:
    lo, hi = spec.duration_range
    step = spec.duration_step
    k_lo = max(1, (lo + step - 1) // step)
    k_hi = max(k_lo, hi // step)
    return rng.randint(k_lo, k_hi) * step


def generate_corpus(spec: CorpusSpec) -> Catalog:
    """Deterministically build a catalog from the spec and its seed.

    The prerequisite structure is a layered random DAG: layer-0 subjects are
    basic and every other subject draws prerequisites from strictly lower
    layers, so all subjects are reachable from basic ones.
    """
    spec.validate()
    rng = random.Random(spec.seed)

    width = len(str(spec.n_subjects))
    layers: list[list[str]] = [[] for _ in range(max(1, spec.n_layers))]
    subjects_raw = []
    for i in range(spec.n_subjects):
        sid = f"s{i:0{width}d}"
        layer = min(i, rng.randrange(len(layers)))  # guarantee layer 0 is populated
        layers[layer].append(sid)
        subjects_raw.append((sid, layer))

    layer_of = dict(subjects_raw)
    prereqs: dict[str, frozenset[str]] = {}
    for sid, layer in subjects_raw:
        below = [s for lower in layers[:layer] for s in lower]
        if not below or layer == 0:
            prereqs[sid] = frozenset()
            continue
        n = rng.randint(1, min(2, len(below)))
        prereqs[sid] = frozenset(rng.sample(below, n))

    objects = []
    object_sets: dict[str, set[str]] = {sid: set() for sid, _ in subjects_raw}
    owidth = len(str(spec.n_subjects * spec.objects_per_subject))
    counter = 0
    for sid, _layer in subjects_raw:
        for _ in range(spec.objects_per_subject):
            oid = f"o{counter:0{owidth}d}"
            counter += 1
            text, audio, video = _draw_components(rng, spec)
            bitrate = _draw_bitrate(rng, spec, text, audio, video)
            duration = _draw_duration(rng, spec)
            size = max(1, round(bitrate * duration))
            objects.append(LearningObject(
                id=oid,
                name=f"object {oid}",
                subject=sid,
                location=f"http://content.example/{oid}",
                video_component=video,
                audio_component=audio,
                text_component=text,
                size=size,
                duration=duration,
            ))
            object_sets[sid].add(oid)

    subjects = tuple(
        Subject(id=sid, name=f"subject {sid}", prerequisite_set=prereqs[sid],
                learning_object_set=frozenset(object_sets[sid]))
        for sid, _ in subjects_raw
    )

    all_ids = [sid for sid, _ in subjects_raw]
    skills = []
    for k in range(spec.skill_count):
        lo, hi = spec.skill_size_range
        n = rng.randint(lo, min(hi, len(all_ids)))
        members = rng.sample(all_ids, n)
        members.sort(key=lambda s: (layer_of[s], s))  # prerequisite-consistent order
        skills.append(Skill(name=f"skill-{k}", subject_list=tuple(members)))

    return Catalog(subjects, tuple(objects), tuple(skills))
