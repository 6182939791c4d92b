// SPDX-License-Identifier: MIT

#ifndef AES256CTR_H
#define AES256CTR_H

#include "aes.h"

typedef aes256ctx aes256ctr_ctx;

#define AES256CTR_BLOCKBYTES 64

#endif
