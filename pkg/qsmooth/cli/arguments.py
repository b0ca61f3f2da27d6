import argparse

from qsmooth.algebra.utils import DEFAULT_FUEL, FUEL_ENV

# flags shared by every command
common = argparse.ArgumentParser(add_help=False)

# Output Settings
common.add_argument('--json', action='store_true',
                    help='Print a JSON certificate instead of text')
common.add_argument('--out', default=None, type=str,
                    help='Also write the certificate to this path')
common.add_argument('--verbose', action='store_true',
                    help='Log per-rule detail')
common.add_argument('--quiet', action='store_true',
                    help='Only log warnings')

# Verification Settings
common.add_argument('--param-value', '--param_value', dest='param_value',
                    default=None, type=str,
                    help='Cross-check every identity at this rational value '
                         'of the parameter')
common.add_argument('--fuel', default=None, type=int,
                    help='Rewrite steps allowed per normal form (default: '
                         '$%s or %d)' % (FUEL_ENV, DEFAULT_FUEL))
common.add_argument('--num_workers', default=1, type=int,
                    help='Worker processes for sweeps')

# algebra parameters for catalog inputs
params = argparse.ArgumentParser(add_help=False)
params.add_argument('-l', default=None, type=int,
                    help='Integer parameter l of the catalog entry')
params.add_argument('-k', default=None, type=int,
                    help='Integer parameter k of the catalog entry')
params.add_argument('--printed', action='store_true',
                    help='Use the printed variant of the A(k, l) relations')

parser = argparse.ArgumentParser(
    prog='qsmooth',
    description='qsmooth: exact verification of rewriting, strong '
                'connections and GWA smoothness')
commands = parser.add_subparsers(dest='command', metavar='COMMAND')
commands.required = True

FILE_HELP = 'DSL file, or catalog:NAME for a built-in algebra'

check = commands.add_parser('check', parents=[common, params],
                            help='Validate a presentation and its critical '
                                 'pairs')
check.add_argument('file', help=FILE_HELP)
check.add_argument('--samples', default=0, type=int,
                   help='Random elements for the normal-form property suite')
check.add_argument('--seed', default=0, type=int,
                   help='Seed for the property suite')

nf = commands.add_parser('nf', parents=[common, params],
                         help='Normal form of an expression')
nf.add_argument('file', help=FILE_HELP)
nf.add_argument('-e', '--expr', required=True,
                help='Expression in the DSL grammar')

grade = commands.add_parser('grade', parents=[common, params],
                            help='Check a grading and decompose an element')
grade.add_argument('file', help=FILE_HELP)
grade.add_argument('-g', '--grading', required=True)
grade.add_argument('-e', '--expr', default=None,
                   help='Expression to split into homogeneous parts')

connection = commands.add_parser('connection', parents=[common, params],
                                 help='Solve and verify a strong connection')
connection.add_argument('file', help=FILE_HELP)
connection.add_argument('-g', '--grading', required=True)
connection.add_argument('--power', default=1, type=int,
                        help='Verify the connection up to this power')
connection.add_argument('--degree', default=1, type=int,
                        help='Group element the ansatz is for')
how = connection.add_mutually_exclusive_group()
how.add_argument('--ansatz', default=None,
                 help='Ansatz name (default: the one named like the grading)')
how.add_argument('--search', default=None, type=int, metavar='L',
                 help='Search generic ansatze with words up to length L')

gwa = commands.add_parser('gwa', parents=[common, params],
                          help='Match a GWA structure and test smoothness')
gwa.add_argument('file', help=FILE_HELP)

tower = commands.add_parser('tower', parents=[common, params],
                            help='Verify the embeddings of a tower')
tower.add_argument('name', help='wp or rp2minus')

catalog = commands.add_parser('catalog', parents=[common, params],
                              help='List catalog entries or emit one as DSL')
catalog.add_argument('--emit', default=None, metavar='NAME')

recheck = commands.add_parser('recheck', parents=[common],
                              help='Re-verify the witnesses of a certificate')
recheck.add_argument('certificate', help='Certificate JSON file')

sweep = commands.add_parser('sweep', parents=[common],
                            help='Verify a parameter grid in parallel')
sweep.add_argument('kind', choices=['gwa', 'tower'])
sweep.add_argument('-K', '--max_k', default=3, type=int)
sweep.add_argument('-L', '--max_l', default=4, type=int)
