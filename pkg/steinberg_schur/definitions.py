import os

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CONFIG_PATH = os.path.join(ROOT_DIR, 'steinberg_schur', 'config.yml')
CASES_PATH = os.path.join(ROOT_DIR, 'steinberg_schur', 'cases.yml')
CATALOG_PATH = os.path.join(ROOT_DIR, 'steinberg_schur', 'catalog.yml')
