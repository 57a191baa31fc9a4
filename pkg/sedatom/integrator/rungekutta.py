# -*- coding: utf-8 -*-
import logging
import numpy as np

from ..exceptions import SingularityError, CollapseEvent, IonizationEvent, StiffnessError
from ..dynamics import ParticleState, as_rhs
from .integrator import Integrator, StepOutcome


class EmbeddedRungeKutta(Integrator):
    """
    Explicit Runge-Kutta integrator with an embedded pair of orders 5 and 4 and adaptive step size.

    The 5th order solution is propagated, the difference to the 4th order solution estimates the local error.
    The step-size controller proposes dt safety error^(-1/5), limited to a growth of at most `max_growth`, a shrinkage of at most 1/`max_growth`
    and to [dt_min, dt_max].

    Note
    ----
    Derived classes define the Butcher tableau (`A`, `b`, `b_star`, `c`) and a `name`.

    Attributes
    ----------
    dt : `float`
        Proposed size of the next step - kept between calls of :meth:`advance`.
    n_accepted, n_rejected : `int`
        Number of accepted and rejected steps.
    n_superluminal : `int`
        Number of accepted steps that ended with a speed of at least `speed_limit`.
    first_superluminal : `tuple(float)`
        Time and speed (t, v) of the first such step or None.
    """
    name = None
    A = None
    b = None
    b_star = None
    c = None

    def __init__(self, **kwds):
        self.config = None
        self.guards = None
        self.dt = None
        self.speed_limit = None
        self.n_accepted = 0
        self.n_rejected = 0
        self.n_superluminal = 0
        self.first_superluminal = None

        super().__init__(**kwds)

    def init(self, config, guards=None, speed_limit=None):
        """
        Initializes all parameters.

        Parameters
        ----------
        config : :class:`sedatom.physmodel.IntegratorConfig`
            Tolerances and step bounds.
        guards : `tuple(float)`, optional
            Lower and upper guard radius (cm).

            If `guards` is None, no guard is checked.

            The default is None.
        speed_limit : `float`, optional
            Speed (cm/s) that the electron must not reach - usually the speed of light. Reaching it is logged and counted but does not
            stop the trajectory.

            If `speed_limit` is None, the speed is not monitored.

            The default is None.
        """
        self.config = config
        self.guards = guards
        self.dt = config.dt_init
        self.n_accepted = 0
        self.n_rejected = 0
        self.speed_limit = speed_limit
        self.n_superluminal = 0
        self.first_superluminal = None
        self._abs_tol = config.abs_tol
        self._d = np.asarray(self.b) - np.asarray(self.b_star)

    def _stages(self, t, y, dt, f):
        k = np.zeros((len(self.c), y.shape[0]))
        k[0] = f(t, y)
        for i in range(1, len(self.c)):
            k[i] = f(t + self.c[i] * dt, y + dt * (self.A[i][:i] @ k[:i]))
        return k

    def attempt_step(self, state, dt, deriv_fn):
        """Attempts a single step of size `dt`.

        Parameters
        ----------
        state : :class:`sedatom.dynamics.ParticleState`
            State at the beginning of the step.
        dt : `float`
            Step size (s).
        deriv_fn : :class:`sedatom.dynamics.RightHandSide` or `callable`
            Right-hand side f(t, y) on the phase-space vector (x, y, vx, vy).

        Returns
        -------
        :class:`sedatom.integrator.StepOutcome`

        Raises
        ------
        SingularityError
            If the right-hand side can not be evaluated.
        """
        config = self.config
        y = state.vector
        f = as_rhs(deriv_fn).frozen(state.t, y)

        k = self._stages(state.t, y, dt, f)
        y5 = y + dt * (self.b @ k)
        delta = dt * (self._d @ k)

        error = np.max(np.abs(delta) / (self._abs_tol + config.rel_tol * np.abs(y5)))
        if not np.isfinite(error):
            error = np.inf
        accepted = bool(error <= 1.)

        if error == 0.:
            factor = config.max_growth
        else:
            factor = min(config.max_growth, max(1. / config.max_growth, config.safety * error**-0.2))
        dt_next = min(config.dt_max, max(config.dt_min, dt * factor))

        new_state = ParticleState.from_vector(y5, state.t + dt) if accepted else state
        return StepOutcome(state=new_state, dt_next=dt_next, accepted=accepted, error_estimate=float(error))

    def check_guards(self, state):
        if self.guards is None:
            return
        r = state.radius
        if r < self.guards[0]:
            raise CollapseEvent(state.t, state, f"collapse at t={state.t:.6e} s: r={r:.6e} cm below guard {self.guards[0]:.3e} cm")
        if r > self.guards[1]:
            raise IonizationEvent(state.t, state, f"ionization at t={state.t:.6e} s: r={r:.6e} cm above guard {self.guards[1]:.3e} cm")

    def check_speed(self, before, after):
        if self.speed_limit is None:
            return
        v = after.speed
        if v < self.speed_limit:
            return

        self.n_superluminal += 1
        if self.first_superluminal is None:
            self.first_superluminal = (after.t, v)
        if before.speed < self.speed_limit:
            logging.warning(f"speed {v:.6e} cm/s at t={after.t:.6e} s reaches the limit {self.speed_limit:.6e} cm/s - the nonrelativistic equation of motion is not valid")

    def advance(self, state, t_target, deriv_fn, observer=None):
        """Advances `state` to exactly `t_target`.

        Parameters
        ----------
        state : :class:`sedatom.dynamics.ParticleState`
            Initial state.
        t_target : `float`
            Final time (s). The last step is truncated so that `t_target` is never passed.
        deriv_fn : :class:`sedatom.dynamics.RightHandSide` or `callable`
            Right-hand side.
        observer : `callable`, optional
            Called as observer(state_before, state_after, dt) after every accepted step.

            The default is None.

        Returns
        -------
        :class:`sedatom.dynamics.ParticleState`
            The state at `t_target`.

        Raises
        ------
        CollapseEvent
            If the radius falls below the lower guard or the singularity floor.
        IonizationEvent
            If the radius exceeds the upper guard.
        StiffnessError
            If more than `max_rejects` consecutive steps were rejected.
        """
        if t_target < state.t:
            raise ValueError(f"'t_target' ({t_target}) lies before the time of 'state' ({state.t})")

        rhs = as_rhs(deriv_fn)
        rejects = 0
        while state.t < t_target:
            remaining = t_target - state.t
            last = self.dt >= remaining
            dt = remaining if last else self.dt

            try:
                outcome = self.attempt_step(state, dt, rhs)
            except SingularityError as ex:
                logging.info(str(ex))
                raise CollapseEvent(state.t, state, f"collapse at t={state.t:.6e} s: {ex}")

            if not outcome.accepted:
                self.n_rejected += 1
                rejects += 1
                if rejects > self.config.max_rejects:
                    raise StiffnessError(state.t, state, f"{rejects} consecutive rejected steps at t={state.t:.6e} s (dt={dt:.3e} s)")
                self.dt = outcome.dt_next
                continue

            new_state = outcome.state
            if last:
                new_state = ParticleState(new_state.position, new_state.velocity, t_target)
            else:
                self.dt = outcome.dt_next

            self.n_accepted += 1
            rejects = 0
            if observer is not None:
                observer(state, new_state, new_state.t - state.t)
            self.check_speed(state, new_state)
            self.check_guards(new_state)
            state = new_state

        return state


class CashKarp54(EmbeddedRungeKutta):
    """Cash-Karp 5(4) pair. Six stages, 5th order propagated with an embedded 4th order error estimate."""
    name = "cash-karp"
    c = np.array([0., 1/5, 3/10, 3/5, 1., 7/8])
    A = np.array([
        [0., 0., 0., 0., 0.],
        [1/5, 0., 0., 0., 0.],
        [3/40, 9/40, 0., 0., 0.],
        [3/10, -9/10, 6/5, 0., 0.],
        [-11/54, 5/2, -70/27, 35/27, 0.],
        [1631/55296, 175/512, 575/13824, 44275/110592, 253/4096]
        ])
    b = np.array([37/378, 0., 250/621, 125/594, 0., 512/1771])
    b_star = np.array([2825/27648, 0., 18575/48384, 13525/55296, 277/14336, 1/4])


class DormandPrince54(EmbeddedRungeKutta):
    """Dormand-Prince 5(4) pair. Seven stages - the last stage is evaluated at the new point and only enters the error estimate."""
    name = "dormand-prince"
    c = np.array([0., 1/5, 3/10, 4/5, 8/9, 1., 1.])
    A = np.array([
        [0., 0., 0., 0., 0., 0.],
        [1/5, 0., 0., 0., 0., 0.],
        [3/40, 9/40, 0., 0., 0., 0.],
        [44/45, -56/15, 32/9, 0., 0., 0.],
        [19372/6561, -25360/2187, 64448/6561, -212/729, 0., 0.],
        [9017/3168, -355/33, 46732/5247, 49/176, -5103/18656, 0.],
        [35/384, 0., 500/1113, 125/192, -2187/6784, 11/84]
        ])
    b = np.array([35/384, 0., 500/1113, 125/192, -2187/6784, 11/84, 0.])
    b_star = np.array([5179/57600, 0., 7571/16695, 393/640, -92097/339200, 187/2100, 1/40])


def prepare_integrator(integrator, config, guards=None, speed_limit=None):
    """
    Creates and initializes an integrator specified by a description of the embedded pair.

    Supported descriptions:

        - cash-karp: Cash-Karp 5(4) pair, six stages
        - dormand-prince: Dormand-Prince 5(4) pair, seven stages

    Parameters
    ----------
    integrator : `str` or instance of :class:`sedatom.integrator.Integrator`
        Description of the integrator or an instance of :class:`sedatom.integrator.Integrator`.
    config : :class:`sedatom.physmodel.IntegratorConfig`
        Tolerances and step bounds.
    guards : `tuple(float)`, optional
        Lower and upper guard radius (cm). Leaving the interval terminates the trajectory.

        If `guards` is None, no guard is checked.

        The default is None.
    speed_limit : `float`, optional
        Speed (cm/s) whose crossing is logged and counted, see :meth:`EmbeddedRungeKutta.init`.

        The default is None.

    Returns
    -------
    :class:`sedatom.integrator.Integrator`
        The initialized integrator.

    Raises
    ------
    ValueError
        If `integrator` contains an invalid description.
    TypeError
        If `integrator` is neither a string nor an instance of :class:`sedatom.integrator.Integrator`.
    """
    if isinstance(integrator, str):
        if integrator == "cash-karp":
            integrator = CashKarp54()
        elif integrator == "dormand-prince":
            integrator = DormandPrince54()
        else:
            raise ValueError(f"Invalid value of 'integrator'.\n'integrator' has to be 'cash-karp' or 'dormand-prince' but not '{integrator}'")
    elif not isinstance(integrator, Integrator):
        raise TypeError(f"integrator has to be either a string or an instance of 'sedatom.integrator.Integrator' but not of {type(integrator)}")

    integrator.init(config, guards, speed_limit)
    return integrator


def attempt_step(state, dt, deriv_fn, config, tableau="cash-karp"):
    """Functional form of :meth:`EmbeddedRungeKutta.attempt_step`."""
    return prepare_integrator(tableau, config).attempt_step(state, dt, deriv_fn)


def advance(state, t_target, deriv_fn, config, observer=None, guards=None, tableau="cash-karp"):
    """Functional form of :meth:`EmbeddedRungeKutta.advance` with a fresh integrator."""
    return prepare_integrator(tableau, config, guards).advance(state, t_target, deriv_fn, observer)
