"""optforge: an NP-hard optimization data engine.

Procedurally generates solvable instances for 10 tasks, verifies
candidate solutions, computes heuristic baselines, scores completions
with a quality-aware reward, emits curriculum-ordered training corpora
and evaluates solution sets with Success Rate / Quality Ratio.
"""
from .types import (GENERATOR_VERSION, Category, ColorVector, Difficulty,
                    Impossible, IndexList, Instance, PartitionPair, Route,
                    Schedule, Sense, Solution, TaskId, VerifyResult,
                    WrongAnswerShapeError)
from .engine import (all_tasks, build_instance, decode_instance,
                     encode_instance, generate, heuristic_solve, prompt_view,
                     read_instances, render_prompt, verify, write_instances)
from .reward import (DegenerateObjectiveError, QualityRatio, RewardBreakdown,
                     check_format, compute_quality, quality_ratio, score)
from .curriculum import (CalibrationResult, CorpusManifest, CurriculumPlan,
                         apportion, calibrate, difficulty_profile,
                         emit_corpus, plan_curriculum)
from .bench import (EvalReport, MetricPair, build_benchmark, corpus_digest,
                    evaluate, render_report, report_to_json)

__version__ = "0.1.0"

__all__ = [
    "GENERATOR_VERSION", "Category", "ColorVector", "Difficulty",
    "Impossible", "IndexList", "Instance", "PartitionPair", "Route",
    "Schedule", "Sense", "Solution", "TaskId", "VerifyResult",
    "WrongAnswerShapeError",
    "all_tasks", "build_instance", "decode_instance", "encode_instance",
    "generate", "heuristic_solve", "prompt_view", "read_instances",
    "render_prompt", "verify", "write_instances",
    "DegenerateObjectiveError", "QualityRatio", "RewardBreakdown",
    "check_format", "compute_quality", "quality_ratio", "score",
    "CalibrationResult", "CorpusManifest", "CurriculumPlan", "apportion",
    "calibrate", "difficulty_profile", "emit_corpus", "plan_curriculum",
    "EvalReport", "MetricPair", "build_benchmark", "corpus_digest",
    "evaluate", "render_report", "report_to_json",
    "__version__",
]
