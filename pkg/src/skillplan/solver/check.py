"""Independent constraint checker for solved programs.

Re-evaluates every selection constraint directly from the catalog, without
reusing the feasibility filter or the solver: one object per graph subject,
time budget, per-object bandwidth, the three format constraints, and the
ordering pairs.
"""

from __future__ import annotations

from fractions import Fraction

from ..graph import SubjectDependencyGraph
from ..model import Catalog, DeviceProfile, LearningProgram, SessionEnvironment


def check_program(program: LearningProgram, sdg: SubjectDependencyGraph,
                  catalog: Catalog, device: DeviceProfile,
                  env: SessionEnvironment, max_time: float) -> list[str]:
    """Return a list of violated-constraint descriptions (empty if sound)."""
    problems = []

    if set(program.assignment) != set(sdg.nodes):
        problems.append("assignment does not cover exactly the graph subjects")

    total_duration = 0
    cap = Fraction(min(device.max_bandwidth, env.network_bandwidth))
    for sid, oid in sorted(program.assignment.items()):
        obj = catalog.object_by_id.get(oid)
        if obj is None:
            problems.append(f"unknown object {oid}")
            continue
        if obj.subject != sid:
            problems.append(f"object {oid} does not belong to subject {sid}")
        if obj.size > cap * obj.duration:
            problems.append(f"object {oid} exceeds the effective bandwidth")
        if obj.video_component > device.video_enabled:
            problems.append(f"object {oid} has video on a video-disabled device")
        if obj.audio_component > device.audio_enabled:
            problems.append(f"object {oid} has audio on an audio-disabled device")
        if obj.text_component > device.text_enabled:
            problems.append(f"object {oid} has text on a text-disabled device")
        total_duration += obj.duration

    if total_duration > max_time:
        problems.append(f"total duration {total_duration}s exceeds budget {max_time}s")

    expected_pairs = set()
    for a, b in sdg.arcs:
        if a in program.assignment and b in program.assignment:
            expected_pairs.add((program.assignment[a], program.assignment[b]))
    if set(program.order_pairs) != expected_pairs:
        problems.append("order pairs do not match the graph arcs")

    return problems
