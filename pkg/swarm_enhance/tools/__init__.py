from .compare_optimizers import compare_optimizers
from .enhance_image import enhance_image
from .image_metrics import image_metrics
from .run_benchmark import run_benchmark
from .sweep_parameters import sweep_parameters

__all__ = ["compare_optimizers", "enhance_image", "image_metrics", "run_benchmark", "sweep_parameters"]
