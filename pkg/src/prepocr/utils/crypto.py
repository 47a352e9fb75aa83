from hashlib import sha256

SHA256_HASH_LEN = 32


def sha256_hex(*chunks: bytes) -> str:
    digest = sha256()
    for chunk in chunks:
        digest.update(chunk)
    return digest.hexdigest()
