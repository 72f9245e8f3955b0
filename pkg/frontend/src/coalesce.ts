/**
 * Latest-wins request scheduling for the recommendation endpoint.
 *
 * At most one request is in flight. While one is pending, newer states
 * replace the queued one instead of piling up, and a response is applied
 * only if its sequence number is newer than the last applied response, so
 * a stale reply can never overwrite a fresher view. Identical consecutive
 * states do not trigger a request at all.
 */
export class RecommendScheduler<TState, TResult> {
  private sequence = 0;
  private lastApplied = 0;
  private inFlight = false;
  private queued: TState | null = null;
  private lastSent: string | null = null;

  constructor(
    private readonly send: (state: TState) => Promise<TResult>,
    private readonly apply: (result: TResult, state: TState) => void,
    private readonly onError: (error: unknown) => void = () => undefined,
  ) {}

  request(state: TState): void {
    const encoded = JSON.stringify(state);
    if (this.inFlight) {
      // latest wins; going back to the in-flight state cancels the queue
      this.queued = encoded === this.lastSent ? null : state;
      return;
    }
    if (encoded === this.lastSent) return; // no change, no request
    void this.fire(state, encoded);
  }

  private async fire(state: TState, encoded: string): Promise<void> {
    this.lastSent = encoded;
    this.inFlight = true;
    const mySequence = ++this.sequence;
    try {
      const result = await this.send(state);
      if (mySequence > this.lastApplied) {
        this.lastApplied = mySequence;
        this.apply(result, state);
      }
    } catch (error) {
      this.lastSent = null; // allow an identical retry after a failure
      this.onError(error);
    } finally {
      this.inFlight = false;
      const next = this.queued;
      this.queued = null;
      if (next !== null) {
        const nextEncoded = JSON.stringify(next);
        if (nextEncoded !== this.lastSent) void this.fire(next, nextEncoded);
      }
    }
  }
}
