import pytest
from conftest import catalog_of, subj

from skillplan.errors import UnknownSkillError
from skillplan.model import Skill
from skillplan.queries import (
    available_skills,
    known_subject_name_mismatches,
    remaining_subjects,
)

CAT = catalog_of(
    [subj("s1", name="algebra"), subj("s2", {"s1"}, name="calculus"),
     subj("s3", {"s2"}, name="analysis")],
    [],
    [Skill("math", ("s1", "s2", "s3")), Skill("arithmetic", ("s1",))],
)


def test_available_skills_sorted_and_filtered():
    assert available_skills(CAT, frozenset()) == ["arithmetic", "math"]
    assert available_skills(CAT, frozenset({"math"})) == ["arithmetic"]
    assert available_skills(CAT, frozenset({"arithmetic", "math"})) == []


def test_remaining_subjects_keeps_stored_order():
    assert remaining_subjects(CAT, "math", frozenset()) == ["s1", "s2", "s3"]
    assert remaining_subjects(CAT, "math", frozenset({"s2"})) == ["s1", "s3"]
    assert remaining_subjects(CAT, "math", frozenset({"s1", "s2", "s3"})) == []


def test_remaining_subjects_unknown_skill():
    with pytest.raises(UnknownSkillError):
        remaining_subjects(CAT, "cooking", frozenset())


def test_name_mismatch_report():
    known = frozenset({("s1", "algebra"), ("s2", "geometry"), ("zz", "ghost")})
    out = known_subject_name_mismatches(CAT, known)
    assert len(out) == 1
    assert out[0].startswith("s2:")
    assert "geometry" in out[0] and "calculus" in out[0]
