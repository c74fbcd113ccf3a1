#ifndef INTORD_INTORD_HPP
#define INTORD_INTORD_HPP

#include <intord/asymptotics.hpp>
#include <intord/counts.hpp>
#include <intord/distributions.hpp>
#include <intord/numeric.hpp>
#include <intord/oracle.hpp>
#include <intord/series.hpp>
#include <intord/tolerances.hpp>

#endif
