"""
Input validation utilities for the command line.
Each check returns ``(is_valid, error_message)`` so callers can collect or raise.
"""

import math
import re
from pathlib import Path
from typing import Iterable, Optional


class CommandValidator:
    """Validates command line arguments before dispatch"""

    MIN_GRID = 2
    MAX_GRID = 1 << 16
    ID_PATTERN = re.compile(r"^[^\s,]+$")
    OUTPUT_SUFFIXES = {".json", ".csv", ".svg"}

    @staticmethod
    def validate_grid(points: int, name: str = "grid") -> tuple[bool, Optional[str]]:
        """
        Validate a grid size.

        Args:
            points: Number of samples per dimension
            name: Flag name used in the message

        Returns:
            Tuple of (is_valid, error_message)
        """
        if points < CommandValidator.MIN_GRID:
            return False, f"{name} must be at least {CommandValidator.MIN_GRID}"
        if points > CommandValidator.MAX_GRID:
            return False, f"{name} cannot exceed {CommandValidator.MAX_GRID}"
        return True, None

    @staticmethod
    def validate_flux(flux: float) -> tuple[bool, Optional[str]]:
        if not math.isfinite(flux):
            return False, "flux must be a finite number of radians"
        return True, None

    @staticmethod
    def validate_theta(theta: Iterable[float]) -> tuple[bool, Optional[str]]:
        values = list(theta)
        if not values:
            return False, "theta needs at least one component"
        if not all(math.isfinite(x) for x in values):
            return False, "theta components must be finite"
        return True, None

    @staticmethod
    def validate_ids(ids: Iterable[str], kind: str = "id") -> tuple[bool, Optional[str]]:
        """
        Validate a list of vertex or arc ids.

        Returns:
            Tuple of (is_valid, error_message)
        """
        values = list(ids)
        bad = [i for i in values if not CommandValidator.ID_PATTERN.match(i)]
        if bad:
            return False, f"invalid {kind} {bad[0]!r}"
        if len(set(values)) != len(values):
            return False, f"duplicate {kind} in list"
        return True, None

    @staticmethod
    def validate_output_path(path: str) -> tuple[bool, Optional[str]]:
        target = Path(path)
        if target.suffix.lower() not in CommandValidator.OUTPUT_SUFFIXES:
            return False, f"output must end in one of {', '.join(sorted(CommandValidator.OUTPUT_SUFFIXES))}"
        if not target.parent.exists():
            return False, f"directory {target.parent} does not exist"
        return True, None

    @staticmethod
    def validate_radius(radius: int) -> tuple[bool, Optional[str]]:
        if radius < 0:
            return False, "radius must be nonnegative"
        return True, None
