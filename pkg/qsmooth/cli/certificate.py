import json
import os
from dataclasses import asdict, dataclass, field as dc_field
from typing import Dict, Optional

import git

from qsmooth import __version__
from qsmooth.algebra.utils import QSmoothError, log


def gather_metadata() -> Dict:
    # gathering git metadata
    try:
        repo = git.Repo(search_parent_directories=True)
        git_data = dict(
            commit=repo.commit().hexsha,
            branch=repo.active_branch.name,
            is_dirty=repo.is_dirty(),
        )
    except (git.InvalidGitRepositoryError, git.NoSuchPathError,
            ValueError, TypeError):
        # no repository, no commit yet, or a detached head
        git_data = None
    return dict(name='qsmooth', version=__version__, git=git_data)


@dataclass
class Certificate:
    task: str
    algebra: Dict = dc_field(default_factory=dict)
    params: Dict = dc_field(default_factory=dict)
    status: str = 'fail'
    witnesses: Dict = dc_field(default_factory=dict)
    timing: Dict = dc_field(default_factory=dict)
    tool: Optional[Dict] = None

    def __post_init__(self):
        if self.tool is None:
            self.tool = gather_metadata()

    def to_json(self):
        return json.dumps(asdict(self), indent=4, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
            return cls(**data)
        except (ValueError, TypeError) as e:
            raise QSmoothError('not a certificate: %s' % e)


class CertificateWriter:
    """Writes certificates as JSON files, creating the directory first."""

    def __init__(self, path):
        self.path = os.path.expandvars(os.path.expanduser(path))
        basedir = os.path.dirname(self.path)
        if basedir and not os.path.exists(basedir):
            log.info('Creating certificate directory: %s', basedir)
            os.makedirs(basedir, exist_ok=True)

    def write(self, cert):
        log.info('Saving certificate to %s', self.path)
        with open(self.path, 'w', encoding='utf8') as f:
            f.write(cert.to_json())
            f.write('\n')


def load_certificate(path):
    with open(os.path.expanduser(path), 'r', encoding='utf8') as f:
        return Certificate.from_json(f.read())
