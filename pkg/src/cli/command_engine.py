import logging
from typing import Dict, List, Optional, Type

from .base_command import BaseCommand
from .commands import (BNClassCommand, ChernCharCommand, ChernClassesCommand, DRCDivisorCommand,
                       ValidatePhiCommand)
from .render import ResultDocument
from .request import ComputationRequest

LOGGER = logging.getLogger(__name__)


class CommandEngine:
    """Engine for registering and dispatching commands."""

    def __init__(self):
        self.commands: Dict[str, BaseCommand] = {}  # name -> command instance

        # Directly register all available commands
        self.command_classes: Dict[str, Type[BaseCommand]] = {
            'chern-char': ChernCharCommand,
            'chern-classes': ChernClassesCommand,
            'bn-class': BNClassCommand,
            'drc-divisor': DRCDivisorCommand,
            'validate-phi': ValidatePhiCommand,
        }

    def register_command_class(self, command_class: Type[BaseCommand], name: Optional[str] = None):
        """
        Register a command class.

        Args:
            command_class: Class that inherits from BaseCommand
            name: Optional name override
        """
        if not isinstance(command_class, type) or not issubclass(command_class, BaseCommand):
            raise ValueError("Command class must inherit from BaseCommand")
        command_name = name or command_class.__name__
        self.command_classes[command_name] = command_class
        self.commands.pop(command_name, None)

    def get_command(self, name: str) -> BaseCommand:
        """
        Instance of a registered command, created on first use.

        Args:
            name: Registered command name

        Returns:
            The command instance
        """
        if name not in self.command_classes:
            raise ValueError(f"Command not found: {name}")
        if name not in self.commands:
            self.commands[name] = self.command_classes[name](name)
        return self.commands[name]

    def execute(self, request: ComputationRequest, workers: int = 1) -> ResultDocument:
        command = self.get_command(request.command)
        LOGGER.info("running %s on %s", command.get_name(), request.space)
        doc = command.execute(request, workers)
        doc.fill_metadata()
        return doc

    def get_available_commands(self) -> List[str]:
        return sorted(self.command_classes)
