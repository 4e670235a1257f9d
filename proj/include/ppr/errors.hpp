#pragma once

#include <stdexcept>

namespace ppr {

// Bad user/config input: unknown detector, invalid parameters, policy
// violations. CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input data (rating files, snapshots, wire frames). Exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A party aborted or a message violated the protocol. Exit code 1.
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Key mismatch, range violation or other misuse of a crypto primitive.
struct CryptoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ppr
