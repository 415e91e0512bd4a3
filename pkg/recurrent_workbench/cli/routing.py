"""
Command routers.

A router collects command handlers the way an API router collects
endpoints; nested routers with a prefix become verb groups.
"""
import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from recurrent_workbench.models.reports import RunReport

Handler = Callable[[argparse.Namespace], RunReport]


@dataclass(frozen=True)
class Argument:
    flags: tuple[str, ...]
    options: dict[str, Any] = field(default_factory=dict)


def argument(*flags: str, **options: Any) -> Argument:
    """
    Argument of a command, in ``add_argument`` form.

    :param flags: positional name or option strings.
    :param options: keyword arguments of ``add_argument``.
    :return: argument.
    """
    return Argument(flags=flags, options=options)


@dataclass(frozen=True)
class Command:
    name: str
    handler: Handler
    summary: str
    arguments: tuple[Argument, ...] = ()


class CommandRouter:
    """Class for collecting commands and nested routers."""

    def __init__(self, prefix: Optional[str] = None, summary: str = "") -> None:
        self.prefix = prefix
        self.summary = summary
        self.commands: list[Command] = []
        self.routers: list["CommandRouter"] = []

    def command(self, name: str, summary: str, *arguments: Argument) -> Callable[[Handler], Handler]:
        """
        Register a handler under a verb.

        :param name: verb.
        :param summary: one-line help.
        :param arguments: arguments of the verb.
        :return: decorator keeping the handler unchanged.
        """

        def decorator(handler: Handler) -> Handler:  # noqa: WPS430
            self.commands.append(Command(name=name, handler=handler, summary=summary, arguments=arguments))
            return handler

        return decorator

    def include_router(self, router: "CommandRouter") -> None:
        self.routers.append(router)

    def mount(
        self,
        subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]",
        parents: Sequence[argparse.ArgumentParser] = (),
        path: tuple[str, ...] = (),
    ) -> None:
        """
        Add every command of this router and its children to an argparse tree.

        :param subparsers: subparser action of the enclosing parser.
        :param parents: parsers holding the options shared by every verb.
        :param path: verbs leading to this router.
        """
        for command in self.commands:
            parser = subparsers.add_parser(
                command.name,
                help=command.summary,
                description=command.summary,
                parents=list(parents),
            )
            for item in command.arguments:
                parser.add_argument(*item.flags, **item.options)
            parser.set_defaults(handler=command.handler, command_name=" ".join(path + (command.name,)))
        for router in self.routers:
            if router.prefix is None:
                router.mount(subparsers, parents, path)
                continue
            group = subparsers.add_parser(router.prefix, help=router.summary, description=router.summary)
            nested = group.add_subparsers(dest=f"{router.prefix}_verb", metavar="verb", required=True)
            router.mount(nested, parents, path + (router.prefix,))
