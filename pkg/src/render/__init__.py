from src.render.result_renderer import FIXTURE_HEADER, ResultRenderer, load_fixtures
from src.render.table_renderer import TableRenderer

__all__ = ["FIXTURE_HEADER", "ResultRenderer", "TableRenderer", "load_fixtures"]
