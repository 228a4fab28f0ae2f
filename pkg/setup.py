from setuptools import setup, find_packages

setup(
    name="swarm-enhance",
    version="0.1.0",
    packages=find_packages(exclude=["examples", "examples.*"]),
    install_requires=[
        "numpy>=1.24",
        "python-dotenv",
        "FastMCP>=2.13.0,<3",
        "mcp>=1.2,<2",

        # Adicione outras dependências necessárias
    ],
    extras_require={
        "png": ["Pillow>=10.0"],
        "dev": ["pytest>=7.0.0", "scipy>=1.10"],
    },
    entry_points={
        "console_scripts": [
            "swarm-enhance=swarm_enhance.cli:main",
            "swarm-enhance-mcp=swarm_enhance.server:main"
        ]
    },
    author="fean-developer",
    description="Realce de contraste de documentos por modificação de histograma otimizada com enxame de galinhas (CSO/ICSO)",
    python_requires=">=3.10",
)
