from .arguments import parser
from .commands import (EXIT_NO_SOLUTION, EXIT_OK, EXIT_PARSE,
                       EXIT_VALIDATION, EXIT_VERIFICATION, recheck_certificate,
                       run)
from .dsl import DslDocument, emit_dsl, load_document, parse_dsl


def main(argv=None, out=None):
    """Parse argv, run the command and return its exit code."""
    args = parser.parse_args(argv)
    return run(args, out)
