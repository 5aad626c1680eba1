#include "epifuse/core/rng.hpp"

namespace epifuse {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t mix_seed(std::uint64_t root, std::uint64_t domain, std::uint64_t index)
{
    return splitmix64(splitmix64(splitmix64(root) ^ domain) ^ index);
}

} // namespace epifuse
