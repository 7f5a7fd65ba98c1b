"""Footprint overlap and clearance checks on a single scene."""

from typing import Dict, List, Mapping, Optional, Tuple

from ..geometry import Footprint, rectangle_corners, rectangle_polygon, rectangles_overlap
from ..scenario import EGO_ID, Scene


def collision_check(scene: Scene, footprints: Mapping[str, Footprint]) -> Optional[Tuple[str, str]]:
    """
    First overlapping pair in ``scene``, or ``None``.

    ``footprints`` must include an entry for ``"ego"``. The ego is tested against
    every participant first (in id order), then participant pairs among themselves.
    """
    boxes: Dict[str, List[Tuple[float, float]]] = {
        pid: list(rectangle_corners(wp.pose, footprints[pid])) for pid, wp in sorted(scene.participants.items())
    }
    ego_box = rectangle_corners(scene.ego.pose, footprints[EGO_ID])
    for pid, corners in boxes.items():
        if rectangles_overlap(ego_box, corners):
            return (EGO_ID, pid)
    ids = list(boxes)
    for i, id_a in enumerate(ids):
        for id_b in ids[i + 1 :]:
            if rectangles_overlap(boxes[id_a], boxes[id_b]):
                return (id_a, id_b)
    return None


def ego_clearance(scene: Scene, footprints: Mapping[str, Footprint], participant_id: str) -> float:
    """Gap in meters between the ego footprint and one participant's footprint."""
    wp = scene.participants[participant_id]
    ego = rectangle_polygon(scene.ego.pose, footprints[EGO_ID])
    return float(ego.distance(rectangle_polygon(wp.pose, footprints[participant_id])))


__all__ = ["collision_check", "ego_clearance"]
