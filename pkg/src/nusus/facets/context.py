"""The pedagogical context: the feature bundle a search or exercise serves."""

from __future__ import annotations

from dataclasses import dataclass

OBJECTIVES = ("conjugation", "grammar", "mixed")
EXERCISE_CATEGORIES = ("cloze_wordbank", "cloze_select", "role_mcq", "extraction", "any")
COMPREHENSION = ("fast", "slow")
LANGUAGE_VARIANTS = ("native", "foreign")


@dataclass(frozen=True)
class PedagogicalContext:
    objective: str = "mixed"
    exercise_category: str = "any"
    student_level: str | None = None
    comprehension: str = "fast"
    language_variant: str = "native"
    difficulty: int = 1

    def __post_init__(self) -> None:
        if self.objective not in OBJECTIVES:
            raise ValueError(f"unknown objective {self.objective!r}")
        if self.exercise_category not in EXERCISE_CATEGORIES:
            raise ValueError(f"unknown exercise category {self.exercise_category!r}")
        if self.comprehension not in COMPREHENSION:
            raise ValueError(f"unknown comprehension {self.comprehension!r}")
        if self.language_variant not in LANGUAGE_VARIANTS:
            raise ValueError(f"unknown language variant {self.language_variant!r}")
        if self.difficulty not in (1, 2, 3):
            raise ValueError("difficulty must be 1, 2 or 3")

    def field(self, name: str):
        return getattr(self, name)

    def to_dict(self) -> dict:
        return {
            "objective": self.objective,
            "exercise_category": self.exercise_category,
            "student_level": self.student_level,
            "comprehension": self.comprehension,
            "language_variant": self.language_variant,
            "difficulty": self.difficulty,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PedagogicalContext":
        return cls(
            objective=data.get("objective", "mixed"),
            exercise_category=data.get("exercise_category", "any"),
            student_level=data.get("student_level"),
            comprehension=data.get("comprehension", "fast"),
            language_variant=data.get("language_variant", "native"),
            difficulty=int(data.get("difficulty", 1)),
        )
