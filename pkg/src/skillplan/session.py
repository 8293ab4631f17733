"""Deterministic learning-session state machine.

A session walks idle -> skill-selection -> subject-selection -> studying ->
finished, exchanging request/reply message pairs between the user-device
side, the skill manager and the program planner, all in-process. User
decisions are supplied by policy callbacks; ``run_session`` folds the pure
transition function ``step`` over the generated events, so a recorded event
list replays to the identical final state.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

from .errors import InvalidEventError, PolicyChoiceError
from .graph import build_sdg, topological_order
from .model import Catalog, DeviceProfile, SessionEnvironment, UserProfile
from .queries import available_skills, remaining_subjects
from .solver import InfeasibilityDiagnosis, filter_feasible, solve_blp
from .xmlio import AcmlMessage, AcmlParameter

IDLE = "idle"
SKILL_SELECTION = "skill-selection"
SUBJECT_SELECTION = "subject-selection"
STUDYING = "studying"
FINISHED = "finished"

REQUEST_SKILLS = "Request of available skills"
REPLY_SKILLS = "List of skills"
REPLY_SUBJECTS = "List of subjects"
REPLY_PROGRAM = "Learning program"


@dataclass(frozen=True)
class SessionState:
    phase: str
    device: DeviceProfile
    user: UserProfile
    env: SessionEnvironment
    transcript: tuple[AcmlMessage, ...] = ()
    offered_skills: Optional[tuple[str, ...]] = None
    offered_subjects: Optional[tuple[str, ...]] = None
    target: Optional[str] = None
    # Current program as (subject id, object id) pairs in study order.
    program: tuple[tuple[str, str], ...] = ()
    cursor: int = 0
    diagnosis: Optional[InfeasibilityDiagnosis] = None


@dataclass
class UserPolicy:
    skill_choice: Callable[[list[str]], str]
    subject_choice: Callable[[list[str]], str]
    continue_choice: Callable[[], str]  # "continue" | "stop"


@dataclass(frozen=True)
class SessionResult:
    state: SessionState
    events: tuple[tuple, ...]

    @property
    def profile(self) -> UserProfile:
        return self.state.user

    @property
    def transcript(self) -> tuple[AcmlMessage, ...]:
        return self.state.transcript

    @property
    def diagnosis(self) -> Optional[InfeasibilityDiagnosis]:
        return self.state.diagnosis


def _request(sender: str, receiver: str, content: str, reply_with: str) -> AcmlMessage:
    return AcmlMessage("request", (
        AcmlParameter("sender", sender),
        AcmlParameter("receiver", receiver),
        AcmlParameter("content", content),
        AcmlParameter("reply-with", reply_with),
    ))


def _inform(sender: str, receiver: str, content: str, in_reply_to: str) -> AcmlMessage:
    return AcmlMessage("inform", (
        AcmlParameter("sender", sender),
        AcmlParameter("receiver", receiver),
        AcmlParameter("content", content),
        AcmlParameter("in-reply-to", in_reply_to),
    ))


def initial_state(device: DeviceProfile, user: UserProfile,
                  env: SessionEnvironment) -> SessionState:
    return SessionState(IDLE, device, user, env)


def step(catalog: Catalog, state: SessionState, event: tuple) -> SessionState:
    """Pure transition function; raises InvalidEventError out of phase."""
    kind = event[0]

    if kind == "start":
        if state.phase != IDLE:
            raise InvalidEventError(f"start in phase {state.phase}")
        phase = SUBJECT_SELECTION if state.user.desired_skill else SKILL_SELECTION
        return replace(state, phase=phase)

    if kind == "offer-skills":
        if state.phase != SKILL_SELECTION:
            raise InvalidEventError(f"offer-skills in phase {state.phase}")
        offered = tuple(event[1])
        msgs = (
            _request("UDA", "SMA", REQUEST_SKILLS, REPLY_SKILLS),
            _inform("SMA", "UDA", ";".join(offered), REPLY_SKILLS),
        )
        return replace(state, transcript=state.transcript + msgs, offered_skills=offered)

    if kind == "choose-skill":
        if state.phase != SKILL_SELECTION or state.offered_skills is None:
            raise InvalidEventError(f"choose-skill in phase {state.phase}")
        name = event[1]
        if name not in state.offered_skills:
            raise PolicyChoiceError(f"skill {name!r} was not offered")
        user = replace(state.user, desired_skill=name)
        return replace(state, phase=SUBJECT_SELECTION, user=user, offered_skills=None)

    if kind == "offer-subjects":
        if state.phase != SUBJECT_SELECTION:
            raise InvalidEventError(f"offer-subjects in phase {state.phase}")
        offered = tuple(event[1])
        desired = state.user.desired_skill or ""
        msgs = (
            _request("UDA", "SMA", f"Request of remaining subjects for {desired}",
                     REPLY_SUBJECTS),
            _inform("SMA", "UDA", ";".join(offered), REPLY_SUBJECTS),
        )
        transcript = state.transcript + msgs
        if not offered:
            # Every subject of the desired skill is known: acquire it.
            user = replace(
                state.user,
                desired_skill=None,
                acquired_skill_set=state.user.acquired_skill_set | {desired},
            )
            return replace(state, phase=FINISHED, user=user, transcript=transcript,
                           offered_subjects=None)
        return replace(state, transcript=transcript, offered_subjects=offered)

    if kind == "choose-subject":
        if state.phase != SUBJECT_SELECTION or state.offered_subjects is None:
            raise InvalidEventError(f"choose-subject in phase {state.phase}")
        sid = event[1]
        if sid not in state.offered_subjects:
            raise PolicyChoiceError(f"subject {sid!r} was not offered")
        return replace(state, target=sid, offered_subjects=None)

    if kind == "deliver-program":
        if state.phase != SUBJECT_SELECTION or state.target is None:
            raise InvalidEventError(f"deliver-program in phase {state.phase}")
        program = tuple(event[1])
        content = ";".join(f"{sid}:{oid}" for sid, oid in program)
        msgs = (
            _request("UDA", "LPA", f"Request of learning program for {state.target}",
                     REPLY_PROGRAM),
            _inform("LPA", "UDA", content, REPLY_PROGRAM),
        )
        return replace(state, phase=STUDYING, transcript=state.transcript + msgs,
                       program=program, cursor=0)

    if kind == "deliver-diagnosis":
        if state.phase != SUBJECT_SELECTION or state.target is None:
            raise InvalidEventError(f"deliver-diagnosis in phase {state.phase}")
        diagnosis = event[1]
        msgs = (
            _request("UDA", "LPA", f"Request of learning program for {state.target}",
                     REPLY_PROGRAM),
            _inform("LPA", "UDA", f"infeasible: {diagnosis}", REPLY_PROGRAM),
        )
        # The session halts here; the phase stays at subject selection.
        return replace(state, transcript=state.transcript + msgs, diagnosis=diagnosis,
                       target=None)

    if kind == "complete":
        if state.phase != STUDYING or state.cursor >= len(state.program):
            raise InvalidEventError(f"complete in phase {state.phase}")
        sid, _oid = state.program[state.cursor]
        name = catalog.subject_by_id[sid].name
        user = replace(state.user,
                       known_subject_set=state.user.known_subject_set | {(sid, name)})
        cursor = state.cursor + 1
        if cursor < len(state.program):
            return replace(state, user=user, cursor=cursor)
        # Program finished; the target subject is acquired.
        skill = catalog.skill_by_name.get(user.desired_skill or "")
        known = {s for s, _ in user.known_subject_set}
        if skill is not None and all(s in known for s in skill.subject_list):
            user = replace(user, desired_skill=None,
                           acquired_skill_set=user.acquired_skill_set | {skill.name})
            return replace(state, phase=FINISHED, user=user, program=(), cursor=0,
                           target=None)
        return replace(state, phase=SUBJECT_SELECTION, user=user, program=(), cursor=0,
                       target=None)

    if kind == "continue":
        if state.phase != SUBJECT_SELECTION:
            raise InvalidEventError(f"continue in phase {state.phase}")
        return state

    if kind == "stop":
        if state.phase != SUBJECT_SELECTION:
            raise InvalidEventError(f"stop in phase {state.phase}")
        return replace(state, phase=FINISHED)

    raise InvalidEventError(f"unknown event {kind!r}")


def run_session(catalog: Catalog, device: DeviceProfile, user: UserProfile,
                env: SessionEnvironment, policy: UserPolicy) -> SessionResult:
    """Drive a full session; deterministic given the inputs and the policy."""
    state = initial_state(device, user, env)
    events: list[tuple] = []

    def apply(event: tuple) -> None:
        nonlocal state
        state = step(catalog, state, event)
        events.append(event)

    apply(("start",))

    if state.phase == SKILL_SELECTION:
        offered = available_skills(catalog, state.user.acquired_skill_set)
        apply(("offer-skills", tuple(offered)))
        apply(("choose-skill", policy.skill_choice(list(offered))))

    while state.phase == SUBJECT_SELECTION and state.diagnosis is None:
        remaining = remaining_subjects(catalog, state.user.desired_skill,
                                       state.user.known_subject_ids())
        apply(("offer-subjects", tuple(remaining)))
        if state.phase == FINISHED:
            break
        apply(("choose-subject", policy.subject_choice(list(remaining))))

        sdg = build_sdg(catalog, state.user.known_subject_ids(), state.target)
        table = filter_feasible(sdg, catalog, state.device, state.env)
        result = solve_blp(sdg, table, state.user.max_time)
        if isinstance(result, InfeasibilityDiagnosis):
            apply(("deliver-diagnosis", result))
            break
        study_order = tuple(
            (sid, result.assignment[sid]) for sid in topological_order(sdg)
        )
        apply(("deliver-program", study_order))
        while state.phase == STUDYING:
            apply(("complete",))

        if state.phase == SUBJECT_SELECTION:
            if policy.continue_choice() == "stop":
                apply(("stop",))
            else:
                apply(("continue",))

    return SessionResult(state, tuple(events))


def replay(catalog: Catalog, device: DeviceProfile, user: UserProfile,
           env: SessionEnvironment, events) -> SessionState:
    """Fold ``step`` over a recorded event list."""
    state = initial_state(device, user, env)
    for event in events:
        state = step(catalog, state, event)
    return state


# ---------------------------------------------------------------------------
# policies


class SeededPolicy:
    """Deterministic policy whose picks depend only on the offered list.

    Choices are derived from a CRC of (seed, offered list), so an
    interrupted session resumed later makes the same decisions as an
    uninterrupted one. ``stop_after`` limits how many programs are studied
    before stopping (None = run to completion).
    """

    def __init__(self, seed: int, stop_after: Optional[int] = None):
        self.seed = seed
        self.stop_after = stop_after
        self._completed = 0

    def _pick(self, offered: list[str]) -> str:
        if not offered:
            raise PolicyChoiceError("nothing to choose from")
        key = f"{self.seed}|{'|'.join(offered)}".encode()
        return offered[zlib.crc32(key) % len(offered)]

    def skill_choice(self, offered: list[str]) -> str:
        return self._pick(offered)

    def subject_choice(self, offered: list[str]) -> str:
        return self._pick(offered)

    def continue_choice(self) -> str:
        self._completed += 1
        if self.stop_after is not None and self._completed >= self.stop_after:
            return "stop"
        return "continue"

    def as_policy(self) -> UserPolicy:
        return UserPolicy(self.skill_choice, self.subject_choice, self.continue_choice)


def parse_policy_script(text: str) -> UserPolicy:
    """Policy from a line-oriented choice file.

    Lines: ``skill <name>``, ``subject <id>``, ``continue``, ``stop``.
    Choices are consumed in order; running out of lines is a policy error.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    queue = list(lines)

    def next_line(prefix: str) -> str:
        if not queue:
            raise PolicyChoiceError(f"policy script exhausted, expected {prefix!r}")
        line = queue.pop(0)
        if prefix in ("continue", "stop"):
            return line
        if not line.startswith(prefix + " "):
            raise PolicyChoiceError(f"expected {prefix!r} line, got {line!r}")
        return line[len(prefix) + 1:]

    def skill_choice(offered: list[str]) -> str:
        return next_line("skill")

    def subject_choice(offered: list[str]) -> str:
        return next_line("subject")

    def continue_choice() -> str:
        if not queue:
            raise PolicyChoiceError("policy script exhausted, expected continue|stop")
        line = queue.pop(0)
        if line not in ("continue", "stop"):
            raise PolicyChoiceError(f"expected continue|stop, got {line!r}")
        return line

    return UserPolicy(skill_choice, subject_choice, continue_choice)
