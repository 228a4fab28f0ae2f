

from swarm_enhance.logger import EnhanceLogger
from swarm_enhance.config import load_env_config

# Carrega configurações do .env automaticamente na inicialização
load_env_config()

logger = EnhanceLogger.get_logger("swarm_enhance.server")

from mcp.server.fastmcp import FastMCP

from swarm_enhance.tools.enhance_image import enhance_image
from swarm_enhance.tools.compare_optimizers import compare_optimizers
from swarm_enhance.tools.sweep_parameters import sweep_parameters
from swarm_enhance.tools.image_metrics import image_metrics
from swarm_enhance.tools.run_benchmark import run_benchmark
from swarm_enhance.resources.parameter_table import parameter_table
from swarm_enhance.report import dumps_report
from swarm_enhance.validation import get_validation_report

# Cria instância
mcp = FastMCP("swarm-enhance")

# Tools
@mcp.tool("enhance_image", description="Realça o contraste de uma imagem PGM/PNG em tons de cinza por modificação de histograma otimizada (ICSO, CSO ou solução analítica).")
def _enhance_image(input_path: str, output_path: str = None, report_path: str = None,
                   lambda_: float = None, gamma: float = None, optimizer: str = None,
                   iters: int = None, population: int = None, seed: int = 0, repeats: int = 1):
    return enhance_image({
        "input_path": input_path,
        "output_path": output_path,
        "report_path": report_path,
        "lambda": lambda_,
        "gamma": gamma,
        "optimizer": optimizer,
        "iters": iters,
        "population": population,
        "seed": seed,
        "repeats": repeats
    })

@mcp.tool("compare_optimizers", description="Compara otimizadores em execuções independentes com sementes pareadas. Retorna médias de entropia, PSNR, média, variância e estatísticas de custo.")
def _compare_optimizers(input_path: str, optimizers: str = "icso,cso,closed-form", repeats: int = 10,
                        lambda_: float = None, gamma: float = None, iters: int = None,
                        population: int = None, seed: int = 0, report_path: str = None):
    return compare_optimizers({
        "input_path": input_path,
        "optimizers": optimizers,
        "repeats": repeats,
        "lambda": lambda_,
        "gamma": gamma,
        "iters": iters,
        "population": population,
        "seed": seed,
        "report_path": report_path
    })

@mcp.tool("sweep_parameters", description="Varre uma grade de valores de lambda (contraste) e gamma (detalhe), um realce por par.")
def _sweep_parameters(input_path: str, lambdas: str, gammas: str, optimizer: str = None,
                      iters: int = None, population: int = None, seed: int = 0,
                      output_dir: str = None, report_path: str = None):
    return sweep_parameters({
        "input_path": input_path,
        "lambdas": lambdas,
        "gammas": gammas,
        "optimizer": optimizer,
        "iters": iters,
        "population": population,
        "seed": seed,
        "output_dir": output_dir,
        "report_path": report_path
    })

@mcp.tool("image_metrics", description="Calcula entropia, PSNR, média, variância e MSE de uma imagem em relação a uma referência.")
def _image_metrics(input_path: str, reference_path: str = None):
    return image_metrics({
        "input_path": input_path,
        "reference_path": reference_path
    })

@mcp.tool("run_benchmark", description="Executa CSO ou ICSO numa função de teste (sphere, rastrigin, rosenbrock).")
def _run_benchmark(function: str = "sphere", dimension: int = 10, optimizer: str = "icso",
                   iters: int = None, population: int = None, seed: int = 0, repeats: int = 5):
    return run_benchmark({
        "function": function,
        "dimension": dimension,
        "optimizer": optimizer,
        "iters": iters,
        "population": population,
        "seed": seed,
        "repeats": repeats
    })

@mcp.tool("validate_parameters", description="Valida parâmetros de execução sem executar. Retorna erros e avisos de faixa.")
def _validate_parameters(lambda_: float = None, gamma: float = None, repeats: int = None, seed: int = None):
    candidate = {"lambda": lambda_, "gamma": gamma, "repeats": repeats, "seed": seed}
    return get_validation_report({k: v for k, v in candidate.items() if v is not None})

# Resource
@mcp.resource("swarm-enhance://parameter_table")
def _parameter_table():
    return dumps_report(parameter_table({}))

def main():
    logger.info("Inicializando MCP server...")
    try:
        mcp.run()
        logger.info("MCP server finalizado com sucesso.")
    except Exception as e:
        logger.error(f"Erro ao rodar MCP server: {e}", exc_info=True)
        raise

if __name__ == "__main__":
    main()
