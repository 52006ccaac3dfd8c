#ifndef GAMMABAL_SEEDING_HPP
#define GAMMABAL_SEEDING_HPP

#include <cstdint>
#include <string_view>

namespace gammabal {

/// splitmix64 finalizer; stable across platforms.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a, folded through the mixer so short strings spread over 64 bits.
constexpr std::uint64_t hash_name(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return mix_seed(h);
}

/// Independent per-(sampler, classifier, fold) stream from one root seed.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::string_view sampler,
                                    std::string_view classifier, std::uint64_t fold) {
    std::uint64_t h = mix_seed(root);
    h = mix_seed(h ^ hash_name(sampler));
    h = mix_seed(h ^ hash_name(classifier));
    h = mix_seed(h ^ fold);
    return h;
}

}  // namespace gammabal

#endif
