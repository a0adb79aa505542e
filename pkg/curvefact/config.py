# pylint: disable=no-self-argument
from enum import Enum
from pathlib import Path
import warnings
from typing import Any, Dict, Optional, Tuple, Union

from pydantic import BaseSettings, Field, validator  # pylint: disable=no-name-in-module
from pydantic.env_settings import SettingsSourceCallable


__all__ = (
    "DEFAULT_CONFIG_FILE_PATH",
    "LogLevel",
    "CurvefactConfig",
    "load_config_file",
    "CONFIG",
)

DEFAULT_CONFIG_FILE_PATH: str = str(Path.home().joinpath(".curvefact.json"))
"""Default configuration file path.

!!! note
    It is set to: `pathlib.Path.home()/.curvefact.json`

    For Unix-based systems (Linux) this will be equivalent to `~/.curvefact.json`.

"""


class LogLevel(Enum):
    """Replication of logging LogLevels

    - `notset`
    - `debug`
    - `info`
    - `warning`
    - `error`
    - `critical`

    """

    NOTSET = "notset"
    DEBUG = "debug"
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"
    CRITICAL = "critical"


def load_config_file(config_file: Union[str, Path], encoding: str = "utf-8") -> Dict:
    """Read settings from a JSON or YAML configuration file.

    Parameters:
        config_file: Path to the file.
        encoding: Text encoding of the file.

    Returns:
        Dictionary of settings as read from the file, empty if the file is
        missing or cannot be parsed.

    """
    import json
    import yaml

    config_file = Path(config_file)
    if not config_file.is_file():
        return {}

    content = config_file.read_text(encoding=encoding)
    res = {}
    try:
        res = json.loads(content)
    except json.JSONDecodeError as json_exc:
        try:
            res = yaml.safe_load(content)
        except yaml.YAMLError as yaml_exc:
            warnings.warn(
                f"Unable to parse config file {config_file} as JSON or YAML, using the "
                "default settings instead..\n"
                f"Errors:\n  JSON:\n{json_exc}.\n\n  YAML:\n{yaml_exc}"
            )

    if res is None:
        # An empty YAML document loads as None
        warnings.warn(
            f"Unable to load any settings from {config_file}, using the default settings instead."
        )
        res = {}

    return res


def config_file_settings(settings: BaseSettings) -> Dict[str, Any]:
    """Configuration file settings source reading
    [`DEFAULT_CONFIG_FILE_PATH`][curvefact.config.DEFAULT_CONFIG_FILE_PATH].

    Parameters:
        settings: The `pydantic.BaseSettings` class using this function as a
            `pydantic.SettingsSourceCallable`.

    Returns:
        Dictionary of settings as read from the file.

    """
    return load_config_file(
        DEFAULT_CONFIG_FILE_PATH, encoding=settings.__config__.env_file_encoding
    )


class CurvefactConfig(BaseSettings):
    """This class stores the working caps and logging options of `curvefact`.

    Every truncation order or degree cap that a computation uses by default is taken
    from here, so reports can echo the values that produced them.

    """

    log_level: LogLevel = Field(
        LogLevel.WARNING, description="Logging level for the console handler."
    )
    log_dir: Optional[Path] = Field(
        None,
        description="Folder in which a rotating `curvefact.log` is saved. No log file is written when unset.",
    )
    trunc_factor: int = Field(
        4,
        description=(
            "The default semigroup truncation is `trunc_factor * a * b` where `a <= b` are the two "
            "smallest coordinate orders of the branch."
        ),
    )
    trunc_cap: int = Field(
        512,
        description="Hard cap for the truncation order when doubling after an incomplete semigroup.",
    )
    param_order: int = Field(
        8,
        description=(
            "Parameter-series order for unit normalization: terms of total parameter degree "
            "below this order are kept."
        ),
    )
    param_degree: int = Field(
        2,
        description="Degree cap for parameter monomials in the family syzygy system.",
    )
    plane_search_norm: int = Field(
        6,
        description="Largest max-norm of the coefficient vectors tried by the generic plane enumeration.",
    )
    equivalence_degree: int = Field(
        2,
        description="Default polynomial degree cap for the transition matrices of `mf_equivalent`.",
    )
    screen_depth: int = Field(
        3,
        description="Number of (x, y)-adic layers compared by the equivalence invariant screen.",
    )

    @validator(
        "trunc_factor",
        "param_order",
        "param_degree",
        "plane_search_norm",
        "screen_depth",
    )
    def must_be_positive(cls, v, field):
        if v < 1:
            raise ValueError(f"{field.name} must be a positive integer, not {v}")
        return v

    @validator("equivalence_degree")
    def must_not_be_negative(cls, v):
        if v < 0:
            raise ValueError(f"equivalence_degree must not be negative, not {v}")
        return v

    @validator("trunc_cap")
    def cap_must_be_usable(cls, v):
        if v < 8:
            raise ValueError(f"trunc_cap must be at least 8, not {v}")
        return v

    @classmethod
    def from_file(cls, config_file: Union[str, Path], **overrides) -> "CurvefactConfig":
        """Load the settings from an explicit JSON or YAML file.

        Parameters:
            config_file: Path to the configuration file.
            **overrides: Values taking precedence over the file content.

        Returns:
            The loaded configuration.

        """
        values = load_config_file(config_file)
        values.update(overrides)
        return cls(**values)

    class Config:
        """
        This is a pydantic model Config object that restricts the sources of
        CurvefactConfig to initialisation arguments and the configuration file.

        """

        extra = "ignore"
        env_file_encoding = "utf-8"

        @classmethod
        def customise_sources(
            cls,
            init_settings: SettingsSourceCallable,
            env_settings: SettingsSourceCallable,
            file_secret_settings: SettingsSourceCallable,
        ) -> Tuple[SettingsSourceCallable, ...]:
            """
            **Priority of config settings sources**:

            1. Passed arguments upon initialization of
               [`CurvefactConfig`][curvefact.config.CurvefactConfig].
            2. Configuration file (JSON/YAML) at
               [DEFAULT_CONFIG_FILE_PATH][curvefact.config.DEFAULT_CONFIG_FILE_PATH].

            Environment variables are not consulted.

            """
            return (init_settings, config_file_settings)


CONFIG = CurvefactConfig()
