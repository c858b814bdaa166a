import copy
import yaml
from pathlib import Path
from typing import Any, Dict, Optional, Union

from qtpc.util.data import default_config_path


# Tensor product code parity-check forms
variants = ['psi', 'companion_t', 'companion']
variant_aliases = {
    'psi': 'psi',
    'companion_t': 'companion_t',
    'companion_transposed': 'companion_t',
    'companion': 'companion',
    'companion_plain': 'companion',
}

# Minimum distance search
default_distance_config = {
    'enumeration_limit': 2 ** 22,
    'max_column_weight': 7,
    'search_limit': 2_000_000,
}

# Component decoders
default_decoder_config = {
    'table_limit': 2 ** 20,
    'search_limit': 200_000,
}

# Capability reports
default_simulation_config = {
    'budget': 100_000,
    'trials': 10_000,
    'confidence': 0.95,
}

# Field construction: m -> primitive polynomial bits, low degree first
default_primitive_polys: Dict[int, list] = {}


def canonical_variant(variant: str) -> str:
    if variant not in variant_aliases:
        raise ValueError(f'Invalid variant: {variant}')
    return variant_aliases[variant]


def merge_config(default: Dict[str, Any],
                 user: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Return a deep copy of ``default`` updated with ``user``. Keys that
    are not present in ``default`` are rejected."""
    config = copy.deepcopy(default)
    if user:
        unknown = set(user) - set(default)
        if unknown:
            raise ValueError(f'Invalid config keys: {sorted(unknown)}')
        config.update(user)
    return config


def load_config(path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """Load a YAML configuration file on top of the packaged defaults.

    Parameters
    ----------
    path : str or Path, optional
        User configuration. If None, only the packaged defaults
        (``data/config/default.yaml``) are read.

    Returns
    -------
    Dict[str, Any]
        Dictionary with the sections ``distance``, ``decoder``,
        ``simulation`` and ``primitive_polys``.
    """
    with open(default_config_path) as f:
        config = yaml.safe_load(f)
    if path is not None:
        with open(path) as f:
            user = yaml.safe_load(f) or {}
        for section, values in user.items():
            if section not in config:
                raise ValueError(f'Invalid config section: {section}')
            if isinstance(config[section], dict):
                config[section] = {**(config[section] or {}), **(values or {})}
            else:
                config[section] = values
    config['primitive_polys'] = {
        int(m): list(bits)
        for m, bits in (config.get('primitive_polys') or {}).items()
    }
    return config


def apply_config(config: Dict[str, Any]) -> None:
    """Install a loaded configuration as the process-wide defaults."""
    default_distance_config.update(config.get('distance') or {})
    default_decoder_config.update(config.get('decoder') or {})
    default_simulation_config.update(config.get('simulation') or {})
    default_primitive_polys.update(config.get('primitive_polys') or {})
