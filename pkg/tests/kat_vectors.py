"""Frozen known-answer vectors.

Generated once by kat_oracle.py (an independent step-by-step reference
implementation) and cross-checked against the package; both must keep
reproducing these bytes exactly on every platform and build.
"""

KAT1_KEY = bytes([0x2A] * 31)
KAT1_PLAINTEXT = bytes(31)
KAT1_CIPHERTEXT = bytes.fromhex(
    "00c2063eb09fc5322f5035b368cc7c89c292eae2ed79e85c88d183cf0b6ba6e8"
    "bd9f86f97db7a97527d44e4aab7c97afef692e181eb69dbb0c1bd9f41ee1379b"
    "8c5b01ce14a84582fa81ca9c9a33bb919d2fcd9f8225ec6ae1b29ed368"
)

KAT2_KEY = bytes(range(1, 31)) + b"\x20"
KAT2_MESSAGE = bytes(range(40))
KAT2_CONTAINER = bytes.fromhex(
    "5033444b0100400100000000000083ab1a4d0d2356541e7e6521131d87846ac9"
    "691f5c83faa9fdc9d42f7fbffbbc23a2782be7dda9b86e5f88c5be173ed01461"
    "87e7b0921c6ee84adcb47b51831d32d49972e703a0e45917f12d8658a4025e9e"
    "131ba68620560604636d2d99a77fd853ffb016bcc8e2402e18f990b72b4aa527"
    "ab0fa713e03d6c3c5b1814351bb19428cbd464c723e316e8ede08d486fb96200"
    "ac458665f113e0da95438202cf749b28940c7464a1403501485a834424517526"
    "bd34d06c8e0f9ea5"
)
