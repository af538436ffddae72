"""Online net-frequency engine over a Weiner suffix tree."""

from .engine import EngineStats, NetFrequencyEngine
from .errors import (InvariantError, NetFreqError, NotADescendant, OffsetOutOfRange,
                     SentinelInInput, StaleReport, StoreNotFresh)
from .net_frequency import DeltaEntry, ExtractEntry, NetFrequencyIndex, NfEntry, PhiSet
from .text_store import BYTES, CODEPOINTS, SENTINEL, TextStore, decode, encode, new_store
from .weiner import Locus, Node, SuffixTree, TreeStats, UpdateReport

__all__ = [
    "BYTES", "CODEPOINTS", "SENTINEL",
    "DeltaEntry", "EngineStats", "ExtractEntry", "Locus", "NetFrequencyEngine",
    "NetFrequencyIndex", "NfEntry", "Node", "PhiSet", "SuffixTree", "TextStore",
    "TreeStats", "UpdateReport",
    "InvariantError", "NetFreqError", "NotADescendant", "OffsetOutOfRange",
    "SentinelInInput", "StaleReport", "StoreNotFresh",
    "decode", "encode", "new_store",
]
