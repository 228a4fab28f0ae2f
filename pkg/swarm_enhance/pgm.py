"""
Leitura e escrita de imagens PGM (Netpbm P2 ASCII e P5 binário).

PNG é aceito opcionalmente via Pillow (extra `png`), escolhido pelo sufixo
do arquivo em read_image/write_image.
"""
import re
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from swarm_enhance.histogram import MAX_LEVEL, GrayImage, HistogramError
from swarm_enhance.logger import EnhanceLogger

logger = EnhanceLogger.get_logger("swarm_enhance.pgm")

PathLike = Union[str, Path]

_TOKEN = re.compile(rb"#[^\r\n]*|\S+")
_WHITESPACE = b" \t\r\n\v\f"


class ImageIOError(Exception):
    """Erro base de leitura e escrita de imagens."""
    pass


class MissingImageError(ImageIOError):
    """Arquivo de imagem inexistente."""
    pass


class BadMagicError(ImageIOError):
    """Número mágico diferente de P2/P5."""
    pass


class MalformedHeaderError(ImageIOError):
    """Cabeçalho com campos não numéricos ou dimensões inválidas."""
    pass


class UnsupportedMaxvalError(ImageIOError):
    """maxval fora de 1..255."""
    pass


class TruncatedImageError(ImageIOError):
    """Arquivo termina antes de width × height pixels."""
    pass


class ImageWriteError(ImageIOError):
    """Caminho vazio ou não gravável."""
    pass


def _header_tokens(data: bytes, count: int, start: int) -> Tuple[List[bytes], int]:
    """
    Lê `count` tokens a partir de `start`, pulando comentários.

    Returns:
        (tokens, posição logo após o último token)
    """
    tokens = []
    pos = start
    while len(tokens) < count:
        match = _TOKEN.search(data, pos)
        if match is None:
            raise TruncatedImageError("Cabeçalho PGM incompleto")
        pos = match.end()
        token = match.group(0)
        if not token.startswith(b"#"):
            tokens.append(token)
    return tokens, pos


def _parse_int(token: bytes, field: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedHeaderError(f"Campo {field} inválido no cabeçalho PGM: {token!r}")


def parse_pgm(data: bytes) -> GrayImage:
    """
    Decodifica bytes PGM (P2 ou P5, maxval <= 255).

    Valores com maxval < 255 são mantidos sem reescala.

    Raises:
        BadMagicError, MalformedHeaderError, UnsupportedMaxvalError, TruncatedImageError
    """
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise BadMagicError(f"Número mágico PGM inválido: {magic!r}")
    if len(data) > 2 and data[2] not in _WHITESPACE and data[2:3] != b"#":
        raise BadMagicError(f"Número mágico PGM inválido: {data[:3]!r}")

    tokens, pos = _header_tokens(data, 3, 2)
    width = _parse_int(tokens[0], "width")
    height = _parse_int(tokens[1], "height")
    maxval = _parse_int(tokens[2], "maxval")
    if width <= 0 or height <= 0:
        raise MalformedHeaderError(f"Dimensões inválidas: {width}x{height}")
    if not 0 < maxval <= MAX_LEVEL:
        raise UnsupportedMaxvalError(f"maxval {maxval} não suportado (esperado 1..255)")

    expected = width * height
    if magic == b"P5":
        # Exatamente um caractere de espaço separa maxval dos dados binários
        payload = data[pos + 1:pos + 1 + expected]
        if len(payload) < expected:
            raise TruncatedImageError(f"Esperados {expected} bytes de pixels, encontrados {len(payload)}")
        pixels = np.frombuffer(payload, dtype=np.uint8)
    else:
        values = [m.group(0) for m in _TOKEN.finditer(data, pos) if not m.group(0).startswith(b"#")]
        if len(values) < expected:
            raise TruncatedImageError(f"Esperados {expected} valores de pixel, encontrados {len(values)}")
        try:
            pixels = np.array([int(v) for v in values[:expected]], dtype=np.int64)
        except ValueError:
            raise MalformedHeaderError("Valor de pixel não numérico em PGM P2")

    if pixels.max(initial=0) > maxval:
        raise MalformedHeaderError(f"Pixel acima de maxval ({maxval})")
    try:
        return GrayImage(width=width, height=height, pixels=pixels.reshape(height, width))
    except HistogramError as e:
        raise MalformedHeaderError(str(e)) from e


def read_pgm(path: PathLike) -> GrayImage:
    """
    Lê um arquivo PGM.

    Raises:
        MissingImageError: Se o arquivo não existir
        ImageIOError: Demais falhas de formato (ver parse_pgm)
    """
    path = Path(path)
    if not path.is_file():
        raise MissingImageError(f"Arquivo não encontrado: {path}")
    image = parse_pgm(path.read_bytes())
    logger.info(f"PGM lido: {path} ({image.width}x{image.height})")
    return image


def encode_pgm(image: GrayImage, fmt: str = "P5") -> bytes:
    """Codifica a imagem como PGM com maxval 255."""
    fmt = fmt.upper()
    header = f"{fmt}\n{image.width} {image.height}\n{MAX_LEVEL}\n".encode("ascii")
    if fmt == "P5":
        return header + image.pixels.astype(np.uint8).tobytes()
    if fmt == "P2":
        rows = [" ".join(str(int(v)) for v in row) for row in image.pixels]
        return header + ("\n".join(rows) + "\n").encode("ascii")
    raise ImageWriteError(f"Formato PGM desconhecido: {fmt!r} (use P2 ou P5)")


def write_pgm(image: GrayImage, path: PathLike, fmt: str = "P5") -> None:
    """
    Grava a imagem em PGM; o payload P5 tem exatamente width × height bytes.

    Raises:
        ImageWriteError: Caminho vazio, formato desconhecido ou falha de escrita
    """
    if path is None or str(path).strip() == "":
        raise ImageWriteError("Caminho de saída vazio")
    payload = encode_pgm(image, fmt)
    try:
        Path(path).write_bytes(payload)
    except OSError as e:
        raise ImageWriteError(f"Não foi possível gravar {path}: {e}") from e
    logger.info(f"PGM gravado: {path} ({fmt.upper()}, {image.width}x{image.height})")


def _pillow():
    try:
        from PIL import Image
    except ImportError:
        raise ImageIOError("Suporte a PNG requer Pillow: pip install swarm-enhance[png]")
    return Image


def _is_png(path: PathLike) -> bool:
    return Path(str(path)).suffix.lower() == ".png"


def read_image(path: PathLike) -> GrayImage:
    """Lê PGM ou, pelo sufixo .png, PNG convertido para tons de cinza."""
    if not _is_png(path):
        return read_pgm(path)
    path = Path(path)
    if not path.is_file():
        raise MissingImageError(f"Arquivo não encontrado: {path}")
    Image = _pillow()
    try:
        with Image.open(path) as img:
            array = np.asarray(img.convert("L"))
    except OSError as e:
        raise ImageIOError(f"Não foi possível ler {path}: {e}") from e
    return GrayImage.from_array(array)


def write_image(image: GrayImage, path: PathLike, fmt: str = "P5") -> None:
    """Grava PGM (P2/P5) ou, pelo sufixo .png, PNG de 8 bits."""
    if path is None or str(path).strip() == "":
        raise ImageWriteError("Caminho de saída vazio")
    if not _is_png(path):
        write_pgm(image, path, fmt)
        return
    Image = _pillow()
    try:
        Image.fromarray(np.ascontiguousarray(image.pixels)).save(path)
    except OSError as e:
        raise ImageWriteError(f"Não foi possível gravar {path}: {e}") from e
