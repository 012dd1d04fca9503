#pragma once

#include "riemannwave/errors.hpp"
#include "riemannwave/numerics.hpp"
#include "riemannwave/sampled_wave_csv.hpp"
#include "riemannwave/spectral.hpp"
#include "riemannwave/stochastic.hpp"
#include "riemannwave/theta.hpp"
#include "riemannwave/tolerances.hpp"
#include "riemannwave/wavefunction.hpp"
#include "riemannwave/well.hpp"
#include "riemannwave/xi.hpp"
