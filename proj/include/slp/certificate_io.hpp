#ifndef SLP_CERTIFICATE_IO_HPP
#define SLP_CERTIFICATE_IO_HPP

#include <string>

#include "slp/lefschetz.hpp"

namespace slp {

// Plain-text certificate format: header fields, the basis tuple list, then
// one line per nonzero component in the canonical polynomial syntax.
std::string write_certificate(const KernelCertificate& cert);
KernelCertificate parse_certificate(const std::string& text);

}  // namespace slp

#endif
