#include "wildgoppa/parallel.hpp"

#include <cstdlib>
#include <string>

namespace wildgoppa {

unsigned resolve_jobs(int requested) {
    if (requested > 0) return static_cast<unsigned>(requested);
    if (const char* env = std::getenv("GOPPA_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace wildgoppa
