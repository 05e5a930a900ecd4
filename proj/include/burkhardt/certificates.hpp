#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burkhardt {

struct CertificateOptions {
    unsigned threads = 1;
    std::size_t generate = 100;
    std::size_t sample_obstruction = 10;
};

struct CertificateReport {
    std::string name;
    int criterion = 0;  // acceptance criterion number, 1..13
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> details;
    double seconds = 0;  // kept out of the deterministic body
};

class UnknownCertificate : public std::invalid_argument {
public:
    explicit UnknownCertificate(const std::string& name);
};

/// Certificate names, sorted.
const std::vector<std::string>& certificate_names();

/// Runs the selected certificates ("all" selects every one), concurrently
/// when threads > 1. Reports come back sorted by name. Throws
/// UnknownCertificate before running anything when a name is not known.
std::vector<CertificateReport> run_certificates(const std::vector<std::string>& selection,
                                                const CertificateOptions& opt = {});

}  // namespace burkhardt
