from src.utils.bits.bit_helper import BitHelper

__all__ = ["BitHelper"]
