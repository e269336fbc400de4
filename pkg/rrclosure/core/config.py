from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):

    # Ratliff-Rush chain on monomial ideals
    n_max: int = 16
    window: int = 3

    # Brute-force oracle
    oracle_n_bound: int = 24
    oracle_degree_slack: int = 4  # degree bound = 2 * max generator degree + slack

    # Valuation closures
    valuation_chain_n_max: int = 4

    # Verification suite
    seed: int = 42
    cases: int = 200
    heavy_case_cap: int = 50  # power/reduction checks are quadratic in n
    calculus_cases: int = 1000  # per value group
    probes: int = 200

    # Output
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(env_file=".env", env_prefix="RRCLOSURE_", extra="ignore")


settings = Settings()
