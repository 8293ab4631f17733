import pytest

from skillplan.corpus import CorpusSpec, generate_corpus
from skillplan.model import validate_catalog
from skillplan.xmlio import serialize_catalog


def test_default_corpus_is_valid():
    cat = generate_corpus(CorpusSpec())
    assert validate_catalog(cat).ok
    assert len(cat.subjects) == 30
    assert len(cat.learning_objects) == 30 * 20
    assert len(cat.skills) == 5


def test_generation_is_deterministic():
    a = serialize_catalog(generate_corpus(CorpusSpec(seed=5)))
    b = serialize_catalog(generate_corpus(CorpusSpec(seed=5)))
    c = serialize_catalog(generate_corpus(CorpusSpec(seed=6)))
    assert a == b
    assert a != c


def test_every_object_has_a_component_and_valid_duration():
    spec = CorpusSpec(seed=3)
    cat = generate_corpus(spec)
    lo, hi = spec.duration_range
    for o in cat.learning_objects:
        assert o.video_component or o.audio_component or o.text_component
        assert lo <= o.duration <= hi
        assert o.duration % spec.duration_step == 0
        assert o.size > 0


def test_bitrate_bands_separate_video_from_the_rest():
    spec = CorpusSpec(seed=9)
    cat = generate_corpus(spec)
    floor = min(spec.video_tiers)
    for o in cat.learning_objects:
        if o.video_component:
            assert o.bitrate >= floor
        else:
            assert o.bitrate < floor


def test_component_probability_zero_is_respected():
    cat = generate_corpus(CorpusSpec(seed=1, p_video=0.0))
    assert all(o.video_component == 0 for o in cat.learning_objects)
    cat = generate_corpus(CorpusSpec(seed=1, p_audio=0.0, p_video=0.0))
    assert all(o.text_component == 1 for o in cat.learning_objects)


def test_component_fractions_near_target():
    spec = CorpusSpec(seed=2, n_subjects=100)  # 2000 objects
    cat = generate_corpus(spec)
    n = len(cat.learning_objects)
    for attr, p in (("text_component", spec.p_text),
                    ("audio_component", spec.p_audio),
                    ("video_component", spec.p_video)):
        frac = sum(getattr(o, attr) for o in cat.learning_objects) / n
        assert abs(frac - p) < 0.03, (attr, frac)


def test_spec_validation_rejects_nonsense():
    with pytest.raises(ValueError):
        CorpusSpec(p_text=0.0, p_audio=0.0, p_video=0.0).validate()
    with pytest.raises(ValueError):
        CorpusSpec(n_subjects=0).validate()


def test_skills_follow_prerequisite_order():
    cat = generate_corpus(CorpusSpec(seed=4))
    for skill in cat.skills:
        pos = {sid: i for i, sid in enumerate(skill.subject_list)}
        for sid in skill.subject_list:
            for p in cat.subject_by_id[sid].prerequisite_set:
                if p in pos:
                    assert pos[p] < pos[sid]
