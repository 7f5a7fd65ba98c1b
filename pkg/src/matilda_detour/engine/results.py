"""Campaign report documents and the output directory layout."""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import BaseModel, ConfigDict

from ..core.exceptions import IoError, ScenarioSaveError
from ..core.types import Origin
from ..internal.utils import get_logger
from ..scenario import write_observation, write_scenario
from .campaign import CampaignResult, IterationLog, NoDSRecord

logger = get_logger(__name__)

RESULT_FILE = "result.json"
TIMING_FILE = "timing.json"
SEED_OBSERVATION_FILE = "seed_observation.json"
NODS_DIR = "nods"


class _Doc(BaseModel):
    model_config = ConfigDict(extra="forbid")


class VerdictDoc(_Doc):
    similarity: float
    consistent: bool
    threshold: float


class FitnessDoc(_Doc):
    f_p: float
    f_b: float
    f_con: float
    total: float


class NoDSDoc(_Doc):
    scenario_id: str
    iteration: int
    verdict: VerdictDoc
    fitness: FitnessDoc
    replay_valid: bool
    added: List[str]
    scenario_file: str
    observation_file: str

    @classmethod
    def of(cls, record: NoDSRecord) -> "NoDSDoc":
        sid = record.scenario.id
        return cls(
            scenario_id=sid,
            iteration=record.iteration,
            verdict=VerdictDoc(
                similarity=record.verdict.similarity,
                consistent=record.verdict.consistent,
                threshold=record.verdict.threshold,
            ),
            fitness=FitnessDoc(
                f_p=record.fitness.f_p,
                f_b=record.fitness.f_b,
                f_con=record.fitness.f_con,
                total=record.fitness.total,
            ),
            replay_valid=record.replay_valid,
            added=[p.id for p in record.scenario.participants if p.origin == Origin.ADDED],
            scenario_file=f"{NODS_DIR}/{sid}/scenario.json",
            observation_file=f"{NODS_DIR}/{sid}/observation.json",
        )


class IterationDoc(_Doc):
    iteration: int
    best_total: float
    mean_total: float
    offspring: int
    completed: int
    nods_found: int
    cumulative_nods: int
    mutation_attempts: int
    mutation_valid: int

    @classmethod
    def of(cls, entry: IterationLog) -> "IterationDoc":
        return cls(**entry.__dict__)


class ResultDoc(_Doc):
    seed_id: str
    strategy: str
    rng_seed: int
    iterations_run: int
    nods_count: int
    unique_nods_count: int
    mutation_attempts: int
    mutation_valid: int
    mutation_valid_pct: float
    population: List[str]
    nods: List[NoDSDoc]
    log: List[IterationDoc]

    @classmethod
    def of(cls, result: CampaignResult) -> "ResultDoc":
        return cls(
            seed_id=result.seed_id,
            strategy=result.strategy,
            rng_seed=result.rng_seed,
            iterations_run=result.iterations_run,
            nods_count=result.nods_count,
            unique_nods_count=result.unique_nods_count,
            mutation_attempts=result.mutation_attempts,
            mutation_valid=result.mutation_valid,
            mutation_valid_pct=result.mutation_valid_pct,
            population=list(result.population),
            nods=[NoDSDoc.of(r) for r in result.nods],
            log=[IterationDoc.of(e) for e in result.log],
        )


class TimingDoc(_Doc):
    wall_s: float
    scenarios: int
    stage_total_s: Dict[str, float]
    stage_per_scenario_s: Dict[str, float]

    @classmethod
    def of(cls, result: CampaignResult) -> "TimingDoc":
        return cls(
            wall_s=result.wall_s,
            scenarios=result.timing.scenarios,
            stage_total_s=dict(sorted(result.timing.seconds.items())),
            stage_per_scenario_s=result.timing.per_scenario(),
        )


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def result_json(result: CampaignResult) -> str:
    """Serialized ``result.json``; identical for identical campaigns."""
    return dump_json(ResultDoc.of(result).model_dump(mode="json"))


def write_text(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise IoError(str(path), e.strerror or str(e)) from e


def write_campaign(out_dir: Union[str, Path], result: CampaignResult, include_nods: bool = True) -> Path:
    """
    Write ``result.json``, ``timing.json``, the seed observation and, per NoDS, its
    scenario and observation.

    Raises:
        IoError: If any file cannot be written.
    """
    out = Path(out_dir)
    write_text(out / RESULT_FILE, result_json(result))
    write_text(out / TIMING_FILE, dump_json(TimingDoc.of(result).model_dump(mode="json")))
    if result.seed_observation is not None:
        try:
            write_observation(out / SEED_OBSERVATION_FILE, result.seed_observation)
        except ScenarioSaveError as e:
            raise IoError(str(out / SEED_OBSERVATION_FILE), e.message) from e
    if include_nods:
        for record in result.nods:
            folder = out / NODS_DIR / record.scenario.id
            try:
                write_scenario(folder / "scenario.json", record.scenario)
                write_observation(folder / "observation.json", record.observation)
            except ScenarioSaveError as e:
                raise IoError(str(folder), e.message) from e
    logger.debug(f"Wrote campaign report for {result.seed_id} to {out}")
    return out / RESULT_FILE


__all__ = [
    "RESULT_FILE",
    "TIMING_FILE",
    "SEED_OBSERVATION_FILE",
    "NODS_DIR",
    "ResultDoc",
    "NoDSDoc",
    "IterationDoc",
    "TimingDoc",
    "dump_json",
    "result_json",
    "write_text",
    "write_campaign",
]
