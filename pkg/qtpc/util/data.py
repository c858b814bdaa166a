from importlib import resources as _resources
from pathlib import Path as _Path


data_path = _Path(str(_resources.files('qtpc') / 'data'))
if not data_path.is_dir():
    raise FileNotFoundError(
        f'Data directory not found (expected at {data_path}). '
        'Please reinstall the package.'
    )

# Configuration
default_config_path = data_path / 'config/default.yaml'

# Parameter tables
comparison_table_path = data_path / 'tables/bch_cqc_comparison.yaml'
