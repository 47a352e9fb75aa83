from dataclasses import dataclass


@dataclass
class TrainingPair:
    clean: str
    noisy: str
    target_cer: float
    rate_lambda: float
    seed: int

    def to_record(self) -> dict:
        return {
            "clean": self.clean,
            "noisy": self.noisy,
            "target_cer": self.target_cer,
            "lambda": self.rate_lambda,
            "seed": self.seed,
        }
