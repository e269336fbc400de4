from .closure import ChainReport, ClosureConfig, LStabilityVerdict
from .output import CommandResult
from .star import StarAxiomReport
from .suite import CheckResult, GeneratorConfig, MonomialGeneratorConfig, SuiteReport, ValuationGeneratorConfig
