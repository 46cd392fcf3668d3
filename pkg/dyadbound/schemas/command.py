from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from dyadbound.schemas.graph import GeneratorSpec

Subcommand = Literal["metrics", "bounds", "phase", "gains", "bench", "gen", "expected"]
GRAPH_SUBCOMMANDS = ("metrics", "bounds", "phase", "gains", "gen")


class CommandSpec(BaseModel):
    """One validated CLI invocation"""
    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    input_path: Optional[str] = None
    generator: Optional[GeneratorSpec] = None
    characteristic_path: Optional[str] = None
    characteristic_format: Literal["vector", "set"] = "vector"
    n1: Optional[int] = Field(default=None, ge=0)
    all_n1: bool = False
    output_path: Optional[str] = None
    svg_path: Optional[str] = None
    format: Literal["csv", "json", "svg"] = "csv"
    workers: Optional[int] = Field(default=None, ge=1)
    runs: Optional[int] = Field(default=None, ge=1)
    node_count: Optional[int] = Field(default=None, ge=1)
    edge_count: Optional[int] = Field(default=None, ge=0)
    densities: List[float] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_sources(self):
        command = self.subcommand
        if command in GRAPH_SUBCOMMANDS:
            if (self.input_path is None) == (self.generator is None):
                raise ValueError(f"'{command}' needs exactly one of --input or generator flags")
        if command == "gen" and self.generator is None:
            raise ValueError("'gen' needs generator flags")
        if command == "bench" and (self.generator is None or self.input_path is not None):
            raise ValueError("'bench' needs generator flags and no --input")
        if command == "metrics" and self.characteristic_path is None:
            raise ValueError("'metrics' needs --labels")
        if command == "phase":
            if self.n1 is None and not self.all_n1:
                raise ValueError("'phase' needs --n1")
            if self.all_n1 and self.output_path is None:
                raise ValueError("'phase --n1 all' needs --output")
        if command == "expected":
            if self.node_count is None:
                raise ValueError("'expected' needs --n")
            if self.edge_count is None and not self.densities:
                raise ValueError("'expected' needs --m or at least one --density")
        return self
