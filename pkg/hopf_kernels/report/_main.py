import pathlib
from logging import getLogger
from typing import *

import appdirs
import mako.lookup
import mako.template
import pkg_resources

from hopf_kernels.__about__ import __title__

logger = getLogger(__name__)


def template_directories(*, template_directory: Optional[str] = None) -> List[str]:
    """template_directories lists the directories searched for templates: the configured one, the user's one, then the package's one."""

    directories = []
    if template_directory:
        directories.append(str(pathlib.Path(template_directory).expanduser()))
    directories.append(str(pathlib.Path(appdirs.user_config_dir(__title__)) / 'template'))
    directories.append(pkg_resources.resource_filename('hopf_kernels_resources', 'template'))
    return directories


def _get_template(template_file: str, *, template_directory: Optional[str] = None) -> mako.template.Template:
    lookup = mako.lookup.TemplateLookup(directories=template_directories(template_directory=template_directory), input_encoding="utf-8")
    template = lookup.get_template(template_file)
    logger.debug('use template file: %s', template.filename)
    return template


def render(command: str, data: Dict[str, Any], *, template_directory: Optional[str] = None) -> str:
    """render renders ``<command>.txt`` with ``data``.

    :raises: mako.exceptions.MakoException
    """

    template = _get_template(f"""{command}.txt""", template_directory=template_directory)
    return template.render(data=data)
