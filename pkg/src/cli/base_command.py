from abc import ABC, abstractmethod

from .render import ResultDocument
from .request import ComputationRequest


class BaseCommand(ABC):
    """Abstract base class for all tautchern commands."""

    def __init__(self, name: str):
        self.name = name
        self.description = ""

    @abstractmethod
    def execute(self, request: ComputationRequest, workers: int = 1) -> ResultDocument:
        """
        Run the command.

        Args:
            request: Validated request
            workers: Threads available for evaluation

        Returns:
            The result document (metadata other than timing filled in)
        """
        pass

    def get_name(self) -> str:
        """Get command name."""
        return self.name

    def get_description(self) -> str:
        """Get command description."""
        return self.description
