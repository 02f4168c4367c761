"""Main CLI entry point for actkit."""

import sys

import click

from actkit.config import load_config
from actkit.utils.exit_codes import INPUT_ERROR
from actkit.utils.output import emit_error, set_pretty, set_quiet

# Command aliases: short name -> full command name
ALIASES = {
    "dec": "decompose",
    "sym": "symbolize",
    "enum": "enumerate",
    "idem": "idempotents",
    "cancel": "cancellable",
}


class AliasGroup(click.Group):
    """Click Group with command aliases and JSON usage errors."""

    def get_command(self, ctx, cmd_name):
        rv = click.Group.get_command(self, ctx, cmd_name)
        if rv is not None:
            return rv
        # Check aliases
        if cmd_name in ALIASES:
            return click.Group.get_command(self, ctx, ALIASES[cmd_name])
        return None

    def resolve_command(self, ctx, args):
        # Always resolve alias to the full command name
        cmd_name = args[0] if args else None
        if cmd_name in ALIASES:
            args = [ALIASES[cmd_name]] + args[1:]
        return super().resolve_command(ctx, args)

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        # Usage errors become a JSON error object with the input-error exit code
        try:
            return super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
        except click.ClickException as e:
            emit_error("USAGE_ERROR", e.format_message())
            sys.exit(INPUT_ERROR)
        except click.Abort:
            emit_error("ABORTED", "Aborted")
            sys.exit(INPUT_ERROR)


@click.group(cls=AliasGroup)
@click.version_option(version="1.0.0")
@click.option("--pretty", is_flag=True, default=False, help="Indent JSON output.")
@click.option("--quiet", is_flag=True, default=False, help="Suppress progress output on stderr.")
@click.option(
    "--max-monoid-size",
    type=int,
    default=None,
    help="Reject monoids larger than this (default 64, env ACTKIT_MAX_MONOID_SIZE).",
)
@click.pass_context
def main(ctx, pretty, quiet, max_monoid_size):
    """Decompose, compare and test cancellation of acts over finite monoids.

    Every command prints JSON on stdout. Documents are monoid, act or
    symbolic-act JSON files; monoids may also be given as builtin URIs.

    Configuration:
        ACTKIT_BUDGET - overrides both search budgets
        ACTKIT_ENUMERATION_BUDGET - candidate tables per enumeration (default 10^7)
        ACTKIT_TRIPLE_BUDGET - triple checks per cancellation suite (default 10^6)

    Examples:
        actkit decompose act.json
        actkit cancellable sym.json
        actkit verify --monoid "builtin:cyclic_group(2)" --max-size 3 --suite all
    """
    set_pretty(pretty)
    set_quiet(quiet)
    config = load_config()
    if max_monoid_size is not None:
        if max_monoid_size < 1:
            raise click.BadParameter("must be positive", param_hint="--max-monoid-size")
        config = config.model_copy(update={"max_monoid_size": max_monoid_size})
    ctx.ensure_object(dict)
    ctx.obj["config"] = config


# Import and register all commands
# ruff: noqa: E402
from actkit.commands.acts import coproduct_cmd, decompose_cmd, iso_cmd, symbolize_cmd
from actkit.commands.cancel import cancellable_cmd, internal_cmd
from actkit.commands.monoid import idempotents_cmd
from actkit.commands.verify import enumerate_cmd, verify_cmd

main.add_command(decompose_cmd)
main.add_command(iso_cmd)
main.add_command(coproduct_cmd)
main.add_command(symbolize_cmd)
main.add_command(cancellable_cmd)
main.add_command(internal_cmd)
main.add_command(verify_cmd)
main.add_command(enumerate_cmd)
main.add_command(idempotents_cmd)


if __name__ == "__main__":
    main()
