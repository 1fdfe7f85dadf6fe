from django.core.management.base import BaseCommand, CommandError

from braid3.cli import BOUNDARY_CHOICES, EXIT_OK, AuditKind, CliCommand, CliConfig, run
from braid3.exceptions import Braid3Error

_EXIT_MESSAGES = {
    1: "check failed",
    2: "invalid input",
}


class Command(BaseCommand):
    help = "Normal forms, syllables, extremal-length and entropy bounds, and numeric audits for 3-braids."

    def add_arguments(self, parser):
        parser.add_argument('subcommand', choices=[c.value for c in CliCommand])
        parser.add_argument('audit_kind', nargs='?', choices=[k.value for k in AuditKind],
                            help="what to audit (audit only; default all)")
        parser.add_argument('--word', help="braid word in s1, s2, d, e.g. 's1^3 s2^-2'")
        parser.add_argument('--pure-word', dest='pure_word', help="word in a1, a2, e.g. 'a1^-1 a2'")
        parser.add_argument('--boundary', default='tr', choices=BOUNDARY_CHOICES)
        parser.add_argument('--max-degree', dest='max_degree', type=int)
        parser.add_argument('--check', action='store_true')
        parser.add_argument('--cyclic', action='store_true', help="decompose the cyclic word (syllables only)")
        parser.add_argument('--json', action='store_true')
        parser.add_argument('--seed', type=int, help="overridden by BRAID3_SEED")
        parser.add_argument('--tolerance', type=float)
        parser.add_argument('--workers', type=int)
        parser.add_argument('--samples', type=int)
        parser.add_argument('--grid-step', dest='grid_step', type=float)
        parser.add_argument('--syllables', type=int, default=3, help="length of the seeded word for glue")
        parser.add_argument('--out')

    def handle(self, *args, **options):
        fields = ('word', 'pure_word', 'boundary', 'max_degree', 'check', 'cyclic', 'json', 'seed', 'tolerance',
                  'workers', 'samples', 'grid_step', 'syllables', 'out', 'audit_kind')
        try:
            config = CliConfig(options['subcommand'], **{name: options.get(name) for name in fields})
        except Braid3Error as exc:
            raise CommandError(str(exc), returncode=2)
        code = run(config, self.stdout, self.stderr)
        if code != EXIT_OK:
            raise CommandError(_EXIT_MESSAGES[code], returncode=code)
