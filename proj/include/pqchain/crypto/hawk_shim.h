/*
 * C entry points the Hawk backend links against when PQCHAIN_WITH_HAWK is on.
 *
 * Hawk is not part of liboqs. Provide these functions as a thin wrapper over
 * the Hawk reference implementation and point PQCHAIN_HAWK_LIBRARY at the
 * resulting library. logn is 9 for Hawk-512 and 10 for Hawk-1024. Signatures
 * are detached. All int-returning functions return 0 on success.
 */
#ifndef PQCHAIN_CRYPTO_HAWK_SHIM_H
#define PQCHAIN_CRYPTO_HAWK_SHIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

size_t pqchain_hawk_public_key_bytes(unsigned logn);
size_t pqchain_hawk_secret_key_bytes(unsigned logn);
size_t pqchain_hawk_signature_bytes(unsigned logn);

int pqchain_hawk_keypair(unsigned logn, uint8_t *pk, uint8_t *sk);

/* On entry *siglen is the capacity of sig; on return the bytes written. */
int pqchain_hawk_sign(unsigned logn, uint8_t *sig, size_t *siglen, const uint8_t *msg,
                      size_t msglen, const uint8_t *sk);

/* Returns 0 iff the signature is valid. */
int pqchain_hawk_verify(unsigned logn, const uint8_t *sig, size_t siglen, const uint8_t *msg,
                        size_t msglen, const uint8_t *pk);

#ifdef __cplusplus
}
#endif

#endif /* PQCHAIN_CRYPTO_HAWK_SHIM_H */
