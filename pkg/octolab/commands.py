import argparse
import cmd
import logging
import shlex

log = logging.getLogger('octolab.commands')


class UsageError(Exception):
    """Bad command line, reported with exit status 2"""


class ModArgumentParser(argparse.ArgumentParser):
    def add_argument(self, *args, **kwargs):
        super(ModArgumentParser, self).add_argument(*args, **kwargs)
        return self


class CommandArgumentParser(ModArgumentParser):
    """An argument parser for one subcommand that raises instead of exiting"""

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message.strip() if message else self.prog)
        if message:
            print(message)
        raise HelpShown()

    def error(self, message):
        raise UsageError(f'{self.prog}: {message}')


class HelpShown(Exception):
    pass


class Dispatcher(cmd.Cmd):
    """Runs do_<command> methods; every command returns an exit status.

    Each command parses its own arguments with a class-level parser built
    by chaining add_argument calls.
    """
    def __init__(self, stdout=None):
        cmd.Cmd.__init__(self, stdout=stdout)
        self.status = 0

    def run(self, argv):
        line = shlex.join(argv)
        log.debug('dispatching %r', line)
        try:
            status = self.onecmd(line)
        except HelpShown:
            status = 0
        self.status = status or 0
        return self.status

    def parse(self, parser, arg):
        return parser.parse_args(shlex.split(arg))

    def default(self, line):
        raise UsageError(f'unknown command {line.split()[0]!r}')

    def emptyline(self):
        raise UsageError('no command given')

    def commands(self):
        return sorted(name[3:] for name in self.get_names()
                      if name.startswith('do_') and name != 'do_help')
