from swarm_enhance.logger import EnhanceLogger
from swarm_enhance.metrics import compute_metrics
from swarm_enhance.pgm import read_image
from swarm_enhance.report import to_json_compatible
from typing import Dict, Any

logger = EnhanceLogger.get_logger("swarm_enhance.image_metrics")


def image_metrics(params: Dict[str, Any]):
    """
    Calcula entropia, PSNR, média, variância e MSE de uma imagem.
    Espera:
    {
        "input_path": "saida.pgm",
        "reference_path": "entrada.pgm"   # Opcional - sem referência, PSNR = "inf"
    }
    """
    try:
        input_path = params["input_path"]
        reference_path = params.get("reference_path")

        logger.info(f"Calculando medidas de {input_path} (referência: {reference_path or 'a própria imagem'})")
        image = read_image(input_path)
        reference = read_image(reference_path) if reference_path else image

        metrics = compute_metrics(image, reference=reference)
        result = {
            "input": str(input_path),
            "reference": str(reference_path or input_path),
            "width": image.width,
            "height": image.height,
            "metrics": metrics.to_dict(),
        }
        return to_json_compatible(result)

    except Exception as e:
        logger.error(f"Erro ao calcular medidas: {e}", exc_info=True)
        raise
