from dataclasses import dataclass


@dataclass(frozen=True)
class Rect:
    x0: int
    y0: int
    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("Rect dimensions must be positive, got {}x{}".format(self.width, self.height))

    def fits(self, width: int, height: int) -> bool:
        return self.x0 >= 0 and self.y0 >= 0 and self.x0 + self.width <= width and self.y0 + self.height <= height
