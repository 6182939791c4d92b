#include "pqchain/chain/wallet.hpp"

#include <string>

#include "pqchain/errors.hpp"

namespace pqchain {

Transaction Wallet::create_transaction(ByteView recipient_pk, std::uint64_t amount,
                                       Crypto& crypto) {
  if (recipient_pk.size() != crypto.public_key_size()) {
    throw KeyLengthMismatch("recipient key is " + std::to_string(recipient_pk.size()) +
                            " bytes, " + crypto.name() + " expects " +
                            std::to_string(crypto.public_key_size()));
  }
  Transaction tx;
  tx.sender_pk = keypair_.public_key;
  tx.recipient_pk.assign(recipient_pk.begin(), recipient_pk.end());
  tx.amount = amount;
  tx.nonce = next_nonce_;
  tx.signature = crypto.sign(serialize_transaction_body(tx), keypair_.secret_key).bytes;
  ++next_nonce_;
  return tx;
}

}  // namespace pqchain
