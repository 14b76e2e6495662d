from .simple import RemovalPolicy, SimpleMis
from .incremental import IncrementalMis
from .twolevel import TwoLevelMis
from .implicit import ImplicitMis

__all__ = ["RemovalPolicy", "SimpleMis", "IncrementalMis", "TwoLevelMis", "ImplicitMis"]
